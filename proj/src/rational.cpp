#include "hprop/rational.hpp"

#include <cctype>

#include "hprop/error.hpp"

namespace hprop {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NonMonotonePartition: return "NonMonotonePartition";
    case ErrorKind::EndpointViolation: return "EndpointViolation";
    case ErrorKind::AsymmetricValues: return "AsymmetricValues";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::DisconnectedSkeleton: return "DisconnectedSkeleton";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::LeftLargerThanRight: return "LeftLargerThanRight";
    case ErrorKind::NotALineGraphon: return "NotALineGraphon";
    case ErrorKind::NotTwoBlocks: return "NotTwoBlocks";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// GMP reads a leading 0 as an octal prefix; always parse base 10.
BigInt decimal(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(digits.substr(first)));
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorKind::MalformedInput, "not an exact rational: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  BigInt num;
  BigInt den{1};
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto top = body.substr(0, slash);
    auto bottom = body.substr(slash + 1);
    if (!all_digits(top) || !all_digits(bottom)) malformed(text);
    num = decimal(top);
    den = decimal(bottom);
    if (den == 0) malformed(text);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) malformed(text);
    if (!whole.empty() && !all_digits(whole)) malformed(text);
    if (!frac.empty() && !all_digits(frac)) malformed(text);
    std::string digits = std::string(whole) + std::string(frac);
    num = decimal(digits);
    den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
  } else {
    if (!all_digits(body)) malformed(text);
    num = decimal(body);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::vector<std::string> to_strings(const VectorQ& values) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) out.push_back(to_string(values(i)));
  return out;
}

namespace {

BigInt scaled_numerator(const Rational& value, unsigned bits) {
  return numerator(value) * (BigInt(1) << bits);
}

}  // namespace

std::uint64_t floor_scaled(const Rational& value, unsigned bits) {
  BigInt q = scaled_numerator(value, bits) / denominator(value);
  return q.convert_to<std::uint64_t>();
}

std::uint64_t ceil_scaled(const Rational& value, unsigned bits) {
  BigInt top = scaled_numerator(value, bits);
  BigInt q = top / denominator(value);
  if (q * denominator(value) != top) q += 1;
  return q.convert_to<std::uint64_t>();
}

}  // namespace hprop
