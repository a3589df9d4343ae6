// Copyright 2026 The rtile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/formula.hpp"

namespace rtile::formula {
namespace {

[[noreturn]] void syntax(int line, const std::string& what) {
  throw Error(ErrorCode::kSyntax,
              "line " + std::to_string(line) + ": " + what);
}

bool parse_int(std::string_view token, long long& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Cnf parse_dimacs(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long declared_vars = 0;
  long long declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<long long> pending;
  int pending_line = 0;

  auto finish_clause = [&](int line) {
    if (pending.size() != 3) {
      throw Error(ErrorCode::kClauseArity,
                  "line " + std::to_string(line) + ": clause " +
                      std::to_string(clauses.size() + 1) + " has " +
                      std::to_string(pending.size()) + " literals, expected 3");
    }
    for (long long lit : pending) {
      const long long v = lit < 0 ? -lit : lit;
      if (v > declared_vars) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "line " + std::to_string(line) + ": variable " +
                        std::to_string(v) + " exceeds declared count " +
                        std::to_string(declared_vars));
      }
    }
    if (std::llabs(pending[0]) == std::llabs(pending[1]) ||
        std::llabs(pending[0]) == std::llabs(pending[2]) ||
        std::llabs(pending[1]) == std::llabs(pending[2])) {
      throw Error(ErrorCode::kDuplicateVariable,
                  "line " + std::to_string(line) + ": clause " +
                      std::to_string(clauses.size() + 1) +
                      " repeats a variable");
    }
    clauses.push_back(make_clause(static_cast<int>(pending[0]),
                                  static_cast<int>(pending[1]),
                                  static_cast<int>(pending[2])));
    pending.clear();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens[0] == "c" || tokens[0].front() == 'c') continue;
    if (tokens[0] == "%") break;  // SATLIB trailer
    if (tokens[0] == "p") {
      if (have_header) syntax(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "cnf" ||
          !parse_int(tokens[2], declared_vars) ||
          !parse_int(tokens[3], declared_clauses) || declared_vars < 1 ||
          declared_clauses < 0) {
        syntax(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) syntax(line_no, "clause data before 'p cnf' header");
    for (auto token : tokens) {
      long long lit = 0;
      if (!parse_int(token, lit)) {
        syntax(line_no, "malformed literal '" + std::string(token) + "'");
      }
      if (lit == 0) {
        finish_clause(line_no);
      } else {
        if (pending.empty()) pending_line = line_no;
        pending.push_back(lit);
      }
    }
    if (end == text.size()) break;
  }
  if (!have_header) syntax(line_no, "missing 'p cnf' header");
  if (!pending.empty()) finish_clause(pending_line);
  if (static_cast<long long>(clauses.size()) != declared_clauses) {
    syntax(line_no, "header declares " + std::to_string(declared_clauses) +
                        " clauses, found " + std::to_string(clauses.size()));
  }
  return Cnf(static_cast<int>(declared_vars), std::move(clauses));
}

std::string emit_dimacs(const Cnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.var_count() << ' ' << f.clause_count() << '\n';
  for (const auto& clause : f.clauses()) {
    for (const auto& lit : clause.literals) out << lit.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace rtile::formula
