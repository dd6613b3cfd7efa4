#include "hsums/const_combo.hpp"

#include <atomic>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hsums/special_fn.hpp"

namespace hsums {

ConstAtom ConstAtom::zeta(int k) {
  if (k < 2) throw DomainError("ConstAtom::zeta requires k >= 2");
  return ConstAtom(Kind::zeta, k, 0.0);
}

ConstAtom ConstAtom::numeric(double value) {
  static std::atomic<std::int64_t> next_id{1};
  return ConstAtom(Kind::numeric, 0, value, next_id.fetch_add(1));
}

std::string ConstAtom::name() const {
  switch (kind_) {
    case Kind::one: return "1";
    case Kind::ln2: return "ln2";
    case Kind::pi: return "pi";
    case Kind::catalan: return "G";
    case Kind::zeta: return "zeta" + std::to_string(k_);
    case Kind::numeric: return "num" + std::to_string(id_);
  }
  return "?";
}

double ConstAtom::value() const {
  switch (kind_) {
    case Kind::one: return 1.0;
    case Kind::ln2: return kLn2;
    case Kind::pi: return kPi;
    case Kind::catalan: return kCatalan;
    case Kind::zeta: return riemann_zeta(static_cast<double>(k_));
    case Kind::numeric: return value_;
  }
  return 0.0;
}

Rational ConstCombo::coeff(const ConstAtom& atom) const {
  auto it = terms_.find(atom);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ConstCombo::add_term(const ConstAtom& atom, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(atom, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ConstCombo ConstCombo::operator+(const ConstCombo& o) const {
  ConstCombo out = *this;
  for (const auto& [atom, c] : o.terms_) out.add_term(atom, c);
  return out;
}

ConstCombo ConstCombo::operator-(const ConstCombo& o) const {
  ConstCombo out = *this;
  for (const auto& [atom, c] : o.terms_) out.add_term(atom, -c);
  return out;
}

ConstCombo ConstCombo::operator-() const {
  ConstCombo out;
  for (const auto& [atom, c] : terms_) out.add_term(atom, -c);
  return out;
}

std::string ConstCombo::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [atom, c] : terms_) {
    Rational mag = c.is_negative() ? -c : c;
    if (first) {
      if (c.is_negative()) os << "-";
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    bool is_one_atom = atom.kind() == ConstAtom::Kind::one;
    if (is_one_atom) {
      os << mag.str();
    } else if (mag == Rational(1)) {
      os << atom.name();
    } else {
      os << mag.str() << "*" << atom.name();
    }
  }
  return os.str();
}

std::string ConstCombo::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [atom, c] : terms_) {
    arr.push_back({{"atom", atom.name()},
                   {"num", c.num().str()},
                   {"den", c.den().str()}});
  }
  return arr.dump();
}

ConstCombo combo_add(const ConstCombo& a, const ConstCombo& b) { return a + b; }

ConstCombo combo_scale(const Rational& c, const ConstCombo& a) {
  ConstCombo out;
  if (c.is_zero()) return out;
  for (const auto& [atom, coeff] : a.terms()) out.add_term(atom, c * coeff);
  return out;
}

double combo_eval(const ConstCombo& a) {
  double sum = 0.0;
  for (const auto& [atom, coeff] : a.terms()) sum += coeff.to_double() * atom.value();
  return sum;
}

}  // namespace hsums
