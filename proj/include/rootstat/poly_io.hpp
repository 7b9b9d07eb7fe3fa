#pragma once

// Text format for polynomials: "d; c_0 c_1 ... c_d" with decimal integer
// coefficients. Bernstein-basis files carry a "B;" prefix.

#include "bernstein.hpp"
#include "polynomial.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rootstat {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PolynomialText = std::variant<IntPolynomial, BernsteinPolynomial>;

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<Integer> parse_coefficients(const std::string& degree_field, const std::string& body) {
  long d = -1;
  try {
    std::size_t pos = 0;
    d = std::stol(trim(degree_field), &pos);
    if (pos != trim(degree_field).size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("malformed degree field: '" + trim(degree_field) + "'");
  }
  if (d < 0) throw ParseError("negative degree");
  std::istringstream in(body);
  std::vector<Integer> coeffs;
  std::string tok;
  while (in >> tok) {
    try {
      coeffs.push_back(parse_integer(tok));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (coeffs.size() != static_cast<std::size_t>(d) + 1) {
    throw ParseError("expected " + std::to_string(d + 1) + " coefficients, found " + std::to_string(coeffs.size()));
  }
  return coeffs;
}

}  // namespace detail

inline PolynomialText parse_polynomial_text(const std::string& text) {
  std::string s = detail::trim(text);
  bool bernstein = false;
  if (s.rfind("B;", 0) == 0) {
    bernstein = true;
    s = s.substr(2);
  }
  auto semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("missing ';' after degree");
  auto coeffs = detail::parse_coefficients(s.substr(0, semi), s.substr(semi + 1));
  if (bernstein) {
    std::vector<Rational> b(coeffs.begin(), coeffs.end());
    return BernsteinPolynomial(std::move(b));
  }
  if (coeffs.back() == 0 && coeffs.size() > 1) throw ParseError("leading coefficient is zero");
  return IntPolynomial(std::move(coeffs));
}

inline std::string format_polynomial(const IntPolynomial& p) {
  std::string s = std::to_string(std::max(p.degree(), 0)) + ";";
  if (p.is_zero()) return s + " 0";
  for (const auto& c : p.coeffs()) s += " " + c.get_str();
  return s;
}

/// Bernstein coefficients must be integers to be written in this format.
inline std::string format_polynomial(const BernsteinPolynomial& b) {
  std::string s = "B; " + std::to_string(b.degree) + ";";
  for (const auto& c : b.coeffs) {
    if (c.get_den() != 1) throw std::invalid_argument("format_polynomial: non-integer Bernstein coefficient");
    s += " " + c.get_num().get_str();
  }
  return s;
}

inline PolynomialText read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polynomial_text(ss.str());
}

inline void write_polynomial_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text << "\n";
}

}  // namespace rootstat
