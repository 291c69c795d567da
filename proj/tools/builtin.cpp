#include <charconv>
#include <random>

#include "cli.hpp"
#include "shadowcalc/error.hpp"

namespace shadowcalc::cli {

namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view spec) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::kParseError, "bad builtin spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

BodySpec builtin_body(std::string_view spec, int dim) {
  if (dim < 2 || dim > kMaxDim) {
    fail(ErrorCode::kDimensionOutOfRange, "dim " + std::to_string(dim) + " outside 2..5");
  }
  BodySpec body{std::string(spec), {}};
  if (spec == "cube") {
    for (int mask = 0; mask < (1 << dim); ++mask) {
      Vec v(dim);
      for (int i = 0; i < dim; ++i) v[i] = (mask >> i) & 1;
      body.points.push_back(v);
    }
  } else if (spec == "simplex") {
    body.points.push_back(Vec(dim));
    for (int i = 0; i < dim; ++i) body.points.push_back(Vec::unit(dim, i));
  } else if (spec == "cross") {
    for (int i = 0; i < dim; ++i) {
      body.points.push_back(Vec::unit(dim, i));
      body.points.push_back(-Vec::unit(dim, i));
    }
  } else if (spec.starts_with("ball:")) {
    body.points = ball_approx(dim, parse_number<int>(spec.substr(5), spec)).poly.vertices();
  } else if (spec.starts_with("random:")) {
    const std::string_view args = spec.substr(7);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      fail(ErrorCode::kParseError, "random builtin needs <m>,<seed>");
    }
    const int m = parse_number<int>(args.substr(0, comma), spec);
    const auto seed = parse_number<std::uint64_t>(args.substr(comma + 1), spec);
    if (m < dim + 1) fail(ErrorCode::kInvalidArgument, "random builtin needs at least dim + 1 points");
    std::mt19937_64 eng(seed);
    for (int p = 0; p < m; ++p) {
      Vec v(dim);
      for (int i = 0; i < dim; ++i) v[i] = 2.0 * (static_cast<double>(eng() >> 11) * 0x1.0p-53) - 1.0;
      body.points.push_back(v);
    }
  } else {
    fail(ErrorCode::kParseError, "unknown builtin '" + std::string(spec) + "'");
  }
  return body;
}

}  // namespace shadowcalc::cli
