#pragma once

#include <array>
#include <string>
#include <vector>

#include "planarq/errors.hpp"

namespace planarq::curves {

/// Dense homogeneous polynomial in X, Y, T. Monomials X^i Y^j T^k are stored
/// in descending lex order on (i, j): X^3, X^2Y, X^2T, XY^2, XYT, XT^2, Y^3, ...
template <class Field>
class Form {
 public:
  using Element = typename Field::Element;

  Form() = default;
  Form(const Field& field, unsigned degree)
      : field_(&field), degree_(degree), c_(size(degree), field.zero()) {}

  static Form constant(const Field& field, const Element& c) {
    Form f(field, 0);
    f.c_[0] = c;
    return f;
  }
  /// u X + v Y + w T.
  static Form linear(const Field& field, const Element& u, const Element& v, const Element& w) {
    Form f(field, 1);
    f.c_[0] = u;
    f.c_[1] = v;
    f.c_[2] = w;
    return f;
  }
  static Form variable(const Field& field, unsigned var) {
    std::array<Element, 3> e{field.zero(), field.zero(), field.zero()};
    e[var] = field.one();
    return linear(field, e[0], e[1], e[2]);
  }

  static std::size_t size(unsigned d) { return std::size_t{d + 1} * (d + 2) / 2; }
  static std::size_t index(unsigned i, unsigned j, unsigned d) {
    const unsigned n = d - i;
    return std::size_t{n} * (n + 1) / 2 + (n - j);
  }
  static std::array<unsigned, 3> monomial(std::size_t idx, unsigned d) {
    unsigned n = 0;
    while (std::size_t{n + 1} * (n + 2) / 2 <= idx) ++n;
    const unsigned j = n - static_cast<unsigned>(idx - std::size_t{n} * (n + 1) / 2);
    return {d - n, j, n - j};
  }
  static std::string monomial_name(std::size_t idx, unsigned d) {
    const auto e = monomial(idx, d);
    static const char* names[3] = {"X", "Y", "T"};
    std::string s;
    for (unsigned v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      s += names[v];
      if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
  }

  const Field& field() const { return *field_; }
  unsigned degree() const { return degree_; }
  const std::vector<Element>& coeffs() const { return c_; }
  const Element& coeff(unsigned i, unsigned j, unsigned k) const {
    check_monomial(i, j, k);
    return c_[index(i, j, degree_)];
  }
  void set(unsigned i, unsigned j, unsigned k, const Element& v) {
    check_monomial(i, j, k);
    c_[index(i, j, degree_)] = v;
  }
  bool is_zero() const {
    for (const auto& c : c_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  Element operator()(const Element& x, const Element& y, const Element& t) const {
    std::vector<Element> px{field_->one()}, py{field_->one()}, pt{field_->one()};
    for (unsigned e = 1; e <= degree_; ++e) {
      px.push_back(px.back() * x);
      py.push_back(py.back() * y);
      pt.push_back(pt.back() * t);
    }
    Element acc = field_->zero();
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
      if (c_[idx].is_zero()) continue;
      const auto e = monomial(idx, degree_);
      acc = acc + c_[idx] * px[e[0]] * py[e[1]] * pt[e[2]];
    }
    return acc;
  }

  friend Form operator+(const Form& a, const Form& b) {
    a.check_compatible(b);
    Form r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend Form operator-(const Form& a, const Form& b) {
    a.check_compatible(b);
    Form r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
  }
  friend Form operator*(const Element& s, const Form& a) {
    Form r = a;
    for (auto& c : r.c_) c = s * c;
    return r;
  }
  friend Form operator*(const Form& a, const Form& b) {
    if (a.field_ != b.field_) throw FieldMismatch("forms over different fields");
    Form r(*a.field_, a.degree_ + b.degree_);
    for (std::size_t x = 0; x < a.c_.size(); ++x) {
      if (a.c_[x].is_zero()) continue;
      const auto ea = monomial(x, a.degree_);
      for (std::size_t y = 0; y < b.c_.size(); ++y) {
        if (b.c_[y].is_zero()) continue;
        const auto eb = monomial(y, b.degree_);
        auto& slot = r.c_[index(ea[0] + eb[0], ea[1] + eb[1], r.degree_)];
        slot = slot + a.c_[x] * b.c_[y];
      }
    }
    return r;
  }
  friend bool operator==(const Form& a, const Form& b) {
    return a.field_ == b.field_ && a.degree_ == b.degree_ && a.c_ == b.c_;
  }

  /// Replaces X, Y, T by the given forms, which share one degree.
  Form substitute(const Form& x, const Form& y, const Form& t) const {
    if (x.degree_ != y.degree_ || x.degree_ != t.degree_) throw Error("substituted forms differ in degree");
    const Form one = constant(*field_, field_->one());
    std::vector<Form> px{one}, py{one}, pt{one};
    for (unsigned e = 1; e <= degree_; ++e) {
      px.push_back(px.back() * x);
      py.push_back(py.back() * y);
      pt.push_back(pt.back() * t);
    }
    Form r(*field_, degree_ * x.degree_);
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
      if (c_[idx].is_zero()) continue;
      const auto e = monomial(idx, degree_);
      r = r + c_[idx] * (px[e[0]] * py[e[1]] * pt[e[2]]);
    }
    return r;
  }

  /// Variable v is renamed to variable to[v].
  Form rename(std::array<unsigned, 3> to) const {
    std::array<Form, 3> vars{variable(*field_, to[0]), variable(*field_, to[1]), variable(*field_, to[2])};
    return substitute(vars[0], vars[1], vars[2]);
  }

  template <class Target, class Map>
  Form<Target> map_coeffs(const Target& target, Map&& map) const {
    Form<Target> r(target, degree_);
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
      const auto e = monomial(idx, degree_);
      r.set(e[0], e[1], e[2], map(c_[idx]));
    }
    return r;
  }

 private:
  void check_monomial(unsigned i, unsigned j, unsigned k) const {
    if (i + j + k != degree_) throw Error("monomial degree does not match the form");
  }
  void check_compatible(const Form& b) const {
    if (field_ != b.field_) throw FieldMismatch("forms over different fields");
    if (degree_ != b.degree_) throw Error("adding forms of different degree");
  }

  const Field* field_ = nullptr;
  unsigned degree_ = 0;
  std::vector<Element> c_;
};

}  // namespace planarq::curves
