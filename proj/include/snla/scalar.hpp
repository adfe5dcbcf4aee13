#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snla {

/// Exact rational coefficient. GMP keeps it canonical (reduced, q > 0).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Malformed input: dimension mismatches, bad files, bad literals.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition was refused (non-Jacobi, degenerate form, ...).
/// The message names the failing axiom and a witness.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "p/q", "p" or "-p/q". Throws InputError on anything else or q = 0.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Scalar& s);

std::string to_string(const Vector& v);

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);

Scalar dot(const Vector& a, const Vector& b);

/// Orders by pivot (first nonzero index), then coordinatewise.
bool pivot_less(const Vector& a, const Vector& b);

}  // namespace snla
