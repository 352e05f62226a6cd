// Extended graph metric values: a diameter or girth is a non-negative
// integer, infinite (disconnected graph / acyclic graph), or undefined
// (empty vertex set).

#ifndef ZDG_METRIC_HPP_
#define ZDG_METRIC_HPP_

#include <compare>
#include <stdexcept>
#include <string>

namespace zdg {

class MetricValue {
 public:
  enum class Kind { undefined, finite, infinite };

  constexpr MetricValue() : kind_(Kind::undefined), value_(0) {}

  static constexpr MetricValue undefined() { return MetricValue(); }

  static constexpr MetricValue infinite() {
    MetricValue m;
    m.kind_ = Kind::infinite;
    return m;
  }

  static constexpr MetricValue finite(int v) {
    MetricValue m;
    m.kind_ = Kind::finite;
    m.value_ = v;
    return m;
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_undefined() const { return kind_ == Kind::undefined; }
  constexpr bool is_infinite() const { return kind_ == Kind::infinite; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }

  int value() const {
    if (!is_finite()) {
      throw std::logic_error("MetricValue::value: not a finite value");
    }
    return value_;
  }

  friend constexpr bool operator==(MetricValue const& a, MetricValue const& b)
      = default;

  std::string str() const {
    switch (kind_) {
      case Kind::undefined: return "undefined";
      case Kind::infinite: return "inf";
      default: return std::to_string(value_);
    }
  }

 private:
  Kind kind_;
  int value_;
};

}  // namespace zdg

#endif  // ZDG_METRIC_HPP_
