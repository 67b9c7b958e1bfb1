#ifndef MULTICOH_INTERVAL_HPP
#define MULTICOH_INTERVAL_HPP

#include <algorithm>
#include <stdexcept>
#include <string>

namespace multicoh {

/// Integer extended with -inf/+inf endpoints. Arithmetic is only defined
/// where it is unambiguous; mixing opposite infinities throws.
class ExtInt {
 public:
  static ExtInt neg_inf() { return ExtInt(Tag::NegInf, 0); }
  static ExtInt pos_inf() { return ExtInt(Tag::PosInf, 0); }
  static ExtInt finite(long long v) { return ExtInt(Tag::Finite, v); }

  bool is_finite() const { return tag_ == Tag::Finite; }
  bool is_neg_inf() const { return tag_ == Tag::NegInf; }
  bool is_pos_inf() const { return tag_ == Tag::PosInf; }

  long long value() const {
    if (!is_finite()) throw std::domain_error("ExtInt: value() on an infinite endpoint");
    return v_;
  }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.tag_ == b.tag_ && (a.tag_ != Tag::Finite || a.v_ == b.v_);
  }

  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.tag_ == b.tag_) return a.tag_ == Tag::Finite && a.v_ < b.v_;
    if (a.tag_ == Tag::NegInf) return true;
    if (b.tag_ == Tag::PosInf) return true;
    return false;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

  friend ExtInt operator+(const ExtInt& a, long long c) {
    return a.is_finite() ? finite(a.v_ + c) : a;
  }

  std::string str() const {
    switch (tag_) {
      case Tag::NegInf: return "-inf";
      case Tag::PosInf: return "+inf";
      default: return std::to_string(v_);
    }
  }

 private:
  enum class Tag { NegInf, Finite, PosInf };
  ExtInt(Tag tag, long long v) : tag_(tag), v_(v) {}

  Tag tag_;
  long long v_;
};

/// Set of integers t forming an interval [lo, hi], possibly unbounded on
/// either side. Empty iff lo > hi; the canonical empty form is
/// [+inf, -inf] so equal sets compare equal.
class TwistInterval {
 public:
  TwistInterval(ExtInt lo, ExtInt hi) : lo_(lo), hi_(hi) { canonicalize(); }

  static TwistInterval all() { return {ExtInt::neg_inf(), ExtInt::pos_inf()}; }
  static TwistInterval empty() { return {ExtInt::pos_inf(), ExtInt::neg_inf()}; }
  static TwistInterval point(long long t) { return {ExtInt::finite(t), ExtInt::finite(t)}; }
  static TwistInterval at_least(long long lo) { return {ExtInt::finite(lo), ExtInt::pos_inf()}; }
  static TwistInterval at_most(long long hi) { return {ExtInt::neg_inf(), ExtInt::finite(hi)}; }

  const ExtInt& lo() const { return lo_; }
  const ExtInt& hi() const { return hi_; }

  bool is_empty() const { return hi_ < lo_; }
  bool is_bounded() const { return is_empty() || (lo_.is_finite() && hi_.is_finite()); }

  bool contains(long long t) const {
    const ExtInt e = ExtInt::finite(t);
    return lo_ <= e && e <= hi_;
  }

  TwistInterval intersect(const TwistInterval& other) const {
    return {std::max(lo_, other.lo_, [](const ExtInt& a, const ExtInt& b) { return a < b; }),
            std::min(hi_, other.hi_, [](const ExtInt& a, const ExtInt& b) { return a < b; })};
  }

  std::string str() const {
    if (is_empty()) return "{}";
    if (lo_ == hi_) return "{" + lo_.str() + "}";
    return "[" + lo_.str() + ", " + hi_.str() + "]";
  }

  friend bool operator==(const TwistInterval& a, const TwistInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  void canonicalize() {
    if (hi_ < lo_) {
      lo_ = ExtInt::pos_inf();
      hi_ = ExtInt::neg_inf();
    }
  }

  ExtInt lo_;
  ExtInt hi_;
};

}  // namespace multicoh

#endif  // MULTICOH_INTERVAL_HPP
