#include "odsq/pattern.hpp"

#include <charconv>
#include <stdexcept>

namespace odsq {

CompositePattern CompositePattern::kpow(unsigned j) {
  if (j < 1) throw std::domain_error("kpow: j must be >= 1");
  return {Shape::KPow, j};
}

CompositePattern CompositePattern::kpow_l(unsigned j) {
  if (j < 2) throw std::domain_error("kpowl: j must be >= 2");
  return {Shape::KPowL, j};
}

CompositePattern CompositePattern::multi(unsigned r) {
  if (r < 2) throw std::domain_error("multi: r must be >= 2");
  return {Shape::Multi, r};
}

std::string CompositePattern::to_string() const {
  switch (shape) {
    case Shape::KL:
      return "kl";
    case Shape::KKL:
      return "kkl";
    case Shape::KPow:
      return "kpow:" + std::to_string(param);
    case Shape::KPowL:
      return "kpowl:" + std::to_string(param);
    case Shape::Multi:
      return "multi:" + std::to_string(param);
  }
  return "?";
}

CompositePattern CompositePattern::parse(std::string_view text) {
  if (text == "kl") return kl();
  if (text == "kkl") return kkl();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("unknown composite pattern '" + std::string(text) + "'");
  }
  const std::string_view head = text.substr(0, colon);
  const std::string_view tail = text.substr(colon + 1);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
  if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
    throw std::invalid_argument("bad parameter in pattern '" + std::string(text) + "'");
  }
  try {
    if (head == "kpow") return kpow(value);
    if (head == "kpowl") return kpow_l(value);
    if (head == "multi") return multi(value);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
  throw std::invalid_argument("unknown composite pattern '" + std::string(text) + "'");
}

}  // namespace odsq
