// Copyright 2026 The entpow Authors
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

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "entpow/cli.hpp"

namespace entpow::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view token) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("malformed complex entry '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

cplx parse_complex(std::string_view token) {
  std::string_view s = trim(token);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw ConfigError("empty complex entry");
  if (s.back() != 'j' && s.back() != 'J') return {parse_real(s, token), 0.0};

  s.remove_suffix(1);
  // The imaginary part starts at the last sign that is neither leading nor
  // part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(s, token)};
  return {parse_real(s.substr(0, split), token), parse_real(s.substr(split), token)};
}

std::string format_complex(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

BipartiteOperator read_operator_file(std::istream& in, double unitarity_tol) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!trim(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw ConfigError("operator file is empty");
  std::size_t d1 = 0, d2 = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> d1 >> d2) || (header >> extra) || d1 == 0 || d2 == 0) {
      throw ConfigError("operator file line 1: expected two positive dimensions 'd1 d2'");
    }
  }
  const std::size_t dim = d1 * d2;
  std::vector<cplx> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!next_line()) {
      throw ConfigError("operator file: expected " + std::to_string(dim) + " matrix rows, found " +
                        std::to_string(r));
    }
    std::istringstream row(line);
    std::string token;
    std::size_t count = 0;
    while (row >> token) {
      entries.push_back(parse_complex(token));
      ++count;
    }
    if (count != dim) {
      throw ConfigError("operator file line " + std::to_string(line_no) + ": expected " +
                        std::to_string(dim) + " entries, found " + std::to_string(count));
    }
  }
  if (next_line()) {
    throw ConfigError("operator file line " + std::to_string(line_no) + ": unexpected trailing data");
  }
  ComplexMatrix m(dim, dim, std::move(entries));
  if (!m.all_finite()) throw ConfigError("operator file contains non-finite entries");
  return BipartiteOperator::unitary(d1, d2, std::move(m), unitarity_tol);
}

BipartiteOperator load_operator_file(const std::string& path, double unitarity_tol) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open operator file '" + path + "'");
  return read_operator_file(in, unitarity_tol);
}

void write_operator_file(std::ostream& out, const BipartiteOperator& op) {
  out << op.d1() << ' ' << op.d2() << '\n';
  const ComplexMatrix& m = op.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_complex(m(r, c));
    }
    out << '\n';
  }
}

}  // namespace entpow::cli
