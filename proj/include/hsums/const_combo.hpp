#pragma once

#include <compare>
#include <map>
#include <string>

#include "hsums/rational.hpp"

namespace hsums {

// One named constant in the exact basis {1, ln2, pi, G, zeta(k), numeric atoms}.
// Zeta(k) atoms are never rewritten (zeta(2) stays zeta(2), not pi^2/6); the
// basis is treated as linearly independent. Numeric atoms carry a stored double
// for constants outside the basis.
class ConstAtom {
 public:
  enum class Kind { one, ln2, pi, catalan, zeta, numeric };

  static ConstAtom one() { return ConstAtom(Kind::one, 0, 0.0); }
  static ConstAtom ln2() { return ConstAtom(Kind::ln2, 0, 0.0); }
  static ConstAtom pi() { return ConstAtom(Kind::pi, 0, 0.0); }
  static ConstAtom catalan() { return ConstAtom(Kind::catalan, 0, 0.0); }
  static ConstAtom zeta(int k);
  static ConstAtom numeric(double value);  // assigns a fresh id

  Kind kind() const { return kind_; }
  int zeta_k() const { return k_; }
  std::int64_t numeric_id() const { return id_; }
  double numeric_value() const { return value_; }

  // Canonical basis order: one, ln2, pi, catalan, zeta(2), zeta(3), ..., numeric by id.
  bool operator<(const ConstAtom& o) const {
    if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
    if (kind_ == Kind::zeta) return k_ < o.k_;
    if (kind_ == Kind::numeric) return id_ < o.id_;
    return false;
  }
  bool operator==(const ConstAtom& o) const {
    return kind_ == o.kind_ && k_ == o.k_ && id_ == o.id_;
  }

  std::string name() const;  // "1", "ln2", "pi", "G", "zeta2", "num<id>"
  double value() const;      // numeric value of the atom itself

 private:
  ConstAtom(Kind kind, int k, double value, std::int64_t id = 0)
      : kind_(kind), k_(k), id_(id), value_(value) {}
  Kind kind_;
  int k_;
  std::int64_t id_;
  double value_;
};

// Exact rational-linear combination over the constant basis. Zero coefficients
// are never stored; equality is structural.
class ConstCombo {
 public:
  ConstCombo() = default;
  ConstCombo(const Rational& c) { add_term(ConstAtom::one(), c); }  // NOLINT
  static ConstCombo term(const ConstAtom& atom, const Rational& coeff) {
    ConstCombo c;
    c.add_term(atom, coeff);
    return c;
  }

  const std::map<ConstAtom, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const ConstAtom& atom) const;

  ConstCombo operator+(const ConstCombo& o) const;
  ConstCombo operator-(const ConstCombo& o) const;
  ConstCombo operator-() const;
  bool operator==(const ConstCombo& o) const { return terms_ == o.terms_; }

  void add_term(const ConstAtom& atom, const Rational& coeff);

  // Canonical text form, e.g. "8/3 - 2*ln2".
  std::string str() const;
  // JSON array [{"atom": "...", "num": "...", "den": "..."}]; num/den as
  // strings so arbitrary-size coefficients survive the round trip.
  std::string json() const;

 private:
  std::map<ConstAtom, Rational> terms_;
};

ConstCombo combo_add(const ConstCombo& a, const ConstCombo& b);
ConstCombo combo_scale(const Rational& c, const ConstCombo& a);

// Numeric value of the combination; zeta atoms evaluate through the special
// function kernel, the rest from stored constants.
double combo_eval(const ConstCombo& a);

}  // namespace hsums
