#include "sumkit/int_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace sumkit {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DegenerateGcd: return "degenerate-gcd";
    case Errc::DegenerateSet: return "degenerate-set";
    case Errc::InvalidDilation: return "invalid-dilation";
    case Errc::OutOfRange: return "out-of-range";
    case Errc::EmptyCollection: return "empty-collection";
    case Errc::OracleSize: return "oracle-size";
    case Errc::MissingInput: return "missing-input";
    case Errc::Precondition: return "precondition";
    case Errc::Parse: return "parse";
    case Errc::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

IntSet::IntSet(std::vector<Int> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw Error(Errc::InvalidArgument, "set literal has a repeated element");
}

IntSet IntSet::parse(std::string_view literal) { return IntSet(parse_int_list(literal)); }

bool IntSet::contains(Int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

namespace {

std::string join(std::span<const Int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string IntSet::to_string() const { return join(elems_); }

IntSequence::IntSequence(std::vector<Int> values, std::vector<Int> multiplicities) {
  if (values.size() != multiplicities.size())
    throw Error(Errc::InvalidArgument, "values and multiplicities differ in length");
  if (values.empty()) throw Error(Errc::InvalidArgument, "sequence must be nonempty");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  for (auto i : order) {
    if (!values_.empty() && values_.back() == values[i])
      throw Error(Errc::InvalidArgument, "sequence values must be distinct");
    if (multiplicities[i] < 1)
      throw Error(Errc::InvalidArgument, "multiplicities must be >= 1");
    values_.push_back(values[i]);
    mult_.push_back(multiplicities[i]);
    size_ += multiplicities[i];
  }
}

IntSequence IntSequence::parse(std::string_view values, std::string_view multiplicities) {
  return IntSequence(parse_int_list(values), parse_int_list(multiplicities));
}

IntSequence IntSequence::from_set(const IntSet& set) {
  std::vector<Int> vals(set.elements().begin(), set.elements().end());
  return IntSequence(std::move(vals), std::vector<Int>(set.size(), 1));
}

Int IntSequence::min_multiplicity() const { return *std::min_element(mult_.begin(), mult_.end()); }

std::string IntSequence::to_string() const { return join(values_) + "|" + join(mult_); }

std::vector<Int> parse_int_list(std::string_view literal) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    auto comma = literal.find(',', pos);
    if (comma == std::string_view::npos) comma = literal.size();
    auto token = literal.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(Errc::Parse, "malformed integer list: '" + std::string(literal) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v < 0 ? -v : v);
  if (g == 0) throw Error(Errc::DegenerateGcd, "gcd of a set of zeros is undefined");
  return g;
}

Int gcd_of(const IntSet& set) {
  if (set.empty()) throw Error(Errc::DegenerateGcd, "gcd of an empty set is undefined");
  return gcd_of(set.elements());
}

IntSet normal_form(const IntSet& set) {
  if (set.size() < 2) throw Error(Errc::DegenerateSet, "normal form needs at least two elements");
  const Int a0 = set.min();
  Int g = 0;
  for (Int a : set.elements()) g = std::gcd(g, a - a0);
  std::vector<Int> out;
  out.reserve(set.size());
  for (Int a : set.elements()) out.push_back((a - a0) / g);
  return IntSet(std::move(out));
}

IntSet dilate(const IntSet& set, Int factor) {
  if (factor == 0) throw Error(Errc::InvalidDilation, "dilation factor must be nonzero");
  std::vector<Int> out;
  out.reserve(set.size());
  for (Int a : set.elements()) out.push_back(a * factor);
  return IntSet(std::move(out));
}

IntSet translate(const IntSet& set, Int shift) {
  std::vector<Int> out;
  out.reserve(set.size());
  for (Int a : set.elements()) out.push_back(a + shift);
  return IntSet(std::move(out));
}

int m_index(std::span<const Int> multiplicities, Int alpha) {
  if (alpha < 1) throw Error(Errc::OutOfRange, "alpha must be positive");
  Int prefix = 0;
  for (std::size_t m = 0; m < multiplicities.size(); ++m) {
    prefix += multiplicities[m];
    if (alpha < prefix) return static_cast<int>(m + 1);
  }
  throw Error(Errc::OutOfRange, "alpha must be smaller than the sequence size");
}

Int ap_cover_length(const IntSet& set) {
  if (set.size() < 2) return static_cast<Int>(set.size());
  const Int a0 = set.min();
  Int g = 0;
  for (Int a : set.elements()) g = std::gcd(g, a - a0);
  return (set.max() - a0) / g + 1;
}

bool is_arithmetic_progression(const IntSet& set) {
  return ap_cover_length(set) == static_cast<Int>(set.size());
}

bool is_dilated_initial_interval(std::span<const Int> values) {
  if (values.empty() || values.front() <= 0) return false;
  const Int d = values.front();
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != d * static_cast<Int>(i + 1)) return false;
  return true;
}

}  // namespace sumkit
