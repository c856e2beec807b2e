#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace hprop {

/// Exact rational backed by GMP. Arithmetic results are always canonical
/// (gcd(num, den) = 1, den > 0). Expression templates are off so the type
/// behaves as a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

/// Parses "p/q", an integer, or a finite decimal ("0.2", "-1.25") exactly.
/// Throws Error(MalformedInput) on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

std::vector<std::string> to_strings(const VectorQ& values);

/// floor(value * 2^bits) for value in [0, 1]; used to compare exact rationals
/// against fixed-resolution uniform draws.
std::uint64_t floor_scaled(const Rational& value, unsigned bits);

/// ceil(value * 2^bits) for value in [0, 1].
std::uint64_t ceil_scaled(const Rational& value, unsigned bits);

}  // namespace hprop
