// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace hessq {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::UnmappedVariable: return "UnmappedVariable";
    case ErrorCode::UngradedVariable: return "UngradedVariable";
    case ErrorCode::NotNondecreasing: return "NotNondecreasing";
    case ErrorCode::BelowDiagonal: return "BelowDiagonal";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedFlavor: return "UnsupportedFlavor";
    case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::SamplerStuck: return "SamplerStuck";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- VarId

namespace {
void check_index(int v, const char* what) {
  if (v < 1 || v >= 0x3FFF) fail(ErrorCode::IndexOutOfRange, std::string("bad index for ") + what);
}
}  // namespace

VarId VarId::xs(int s) {
  check_index(s, "x_s");
  return VarId(VarKind::XS, static_cast<std::uint32_t>(s), 0);
}

VarId VarId::q_classical(int s) {
  check_index(s, "q_s");
  return VarId(VarKind::QClassical, static_cast<std::uint32_t>(s), 0);
}

VarId VarId::q(int r, int s) {
  check_index(r, "q_rs");
  check_index(s, "q_rs");
  if (r > s) fail(ErrorCode::IndexOutOfRange, "q_rs needs r <= s");
  if (r == s) return xs(s);
  return VarId(VarKind::Q, static_cast<std::uint32_t>(s - r), static_cast<std::uint32_t>(r));
}

VarId VarId::flag(int i, int j) {
  check_index(i, "x_ij");
  check_index(j, "x_ij");
  if (j >= i) fail(ErrorCode::IndexOutOfRange, "x_ij needs i > j");
  return VarId(VarKind::Flag, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i));
}

VarId VarId::aux(int k) {
  if (k < 0 || k >= 0x3FFF) fail(ErrorCode::IndexOutOfRange, "bad auxiliary index");
  return VarId(VarKind::Aux, static_cast<std::uint32_t>(k), 0);
}

int VarId::index() const { return static_cast<int>(hi()); }
int VarId::r() const { return static_cast<int>(lo()); }
int VarId::s() const { return static_cast<int>(lo() + hi()); }
int VarId::row() const { return static_cast<int>(lo()); }
int VarId::col() const { return static_cast<int>(hi()); }

std::optional<int> VarId::weight() const {
  switch (kind()) {
    case VarKind::T: return 1;
    case VarKind::XS: return 2;
    case VarKind::QClassical: return 4;
    case VarKind::Q: return 2 * (s() - r() + 1);
    case VarKind::Flag: return 2 * (row() - col());
    case VarKind::Lambda:
    case VarKind::Aux: return std::nullopt;
  }
  return std::nullopt;
}

namespace {
std::string pair_label(int a, int b) {
  if (a < 10 && b < 10) return std::to_string(a) + std::to_string(b);
  return std::to_string(a) + "_" + std::to_string(b);
}
const char* kAuxNames[] = {"X", "Y", "Z"};
}  // namespace

std::string VarId::text() const {
  switch (kind()) {
    case VarKind::T: return "t";
    case VarKind::Lambda: return "lambda";
    case VarKind::XS: return "x" + std::to_string(index());
    case VarKind::QClassical: return "q" + std::to_string(index());
    case VarKind::Q: return "q" + pair_label(r(), s());
    case VarKind::Flag: return "x" + pair_label(row(), col());
    case VarKind::Aux:
      return index() < 3 ? kAuxNames[index()] : "u" + std::to_string(index());
  }
  return "?";
}

std::string VarId::latex() const {
  auto pair = [](int a, int b) {
    return (a < 10 && b < 10) ? std::to_string(a) + std::to_string(b)
                              : std::to_string(a) + "," + std::to_string(b);
  };
  switch (kind()) {
    case VarKind::T: return "t";
    case VarKind::Lambda: return "\\lambda";
    case VarKind::XS: return "x_{" + std::to_string(index()) + "}";
    case VarKind::QClassical: return "q_{" + std::to_string(index()) + "}";
    case VarKind::Q: return "q_{" + pair(r(), s()) + "}";
    case VarKind::Flag: return "x_{" + pair(row(), col()) + "}";
    case VarKind::Aux: return text();
  }
  return "?";
}

VarId VarId::parse(const std::string& name) {
  auto bad = [&]() -> VarId { fail(ErrorCode::InvalidArgument, "unknown variable name '" + name + "'"); };
  if (name == "t") return t();
  if (name == "lambda") return lambda();
  if (name == "X") return aux(0);
  if (name == "Y") return aux(1);
  if (name == "Z") return aux(2);
  if (name.size() < 2) return bad();
  char head = name[0];
  std::string rest = name.substr(1);
  if (head == 'u') return aux(std::stoi(rest));
  if (head != 'x' && head != 'q') return bad();
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '_') return bad();
  auto us = rest.find('_');
  int a, b;
  if (us != std::string::npos) {
    a = std::stoi(rest.substr(0, us));
    b = std::stoi(rest.substr(us + 1));
  } else if (rest.size() == 2) {
    a = rest[0] - '0';
    b = rest[1] - '0';
  } else {
    int v = std::stoi(rest);
    return head == 'x' ? xs(v) : q_classical(v);
  }
  // Two digits: a flag entry (a > b) or a pair q_{ab}; for x with a <= b we
  // read it as the diagonal variable with that number.
  if (head == 'x') return a > b ? flag(a, b) : xs(std::stoi(rest));
  return q(a, b);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, std::uint32_t e) {
  Monomial m;
  if (e) m.powers_.push_back({v, e});
  m.recompute_weight();
  return m;
}

Monomial Monomial::from_powers(std::vector<VarPower> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& p : powers) {
    if (!p.exp) continue;
    if (!m.powers_.empty() && m.powers_.back().var == p.var)
      m.powers_.back().exp += p.exp;
    else
      m.powers_.push_back(p);
  }
  m.recompute_weight();
  return m;
}

void Monomial::recompute_weight() {
  weight_ = 0;
  for (const auto& p : powers_)
    if (auto w = p.var.weight()) weight_ += static_cast<std::int64_t>(*w) * p.exp;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const auto& p : powers_)
    if (p.var == v) return p.exp;
  return 0;
}

bool Monomial::has_ungraded() const {
  for (const auto& p : powers_)
    if (!p.var.weight()) return true;
  return false;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& p : powers_) d += p.exp;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.powers_.reserve(powers_.size() + o.powers_.size());
  auto a = powers_.begin(), b = o.powers_.begin();
  while (a != powers_.end() && b != o.powers_.end()) {
    if (a->var < b->var) m.powers_.push_back(*a++);
    else if (b->var < a->var) m.powers_.push_back(*b++);
    else { m.powers_.push_back({a->var, a->exp + b->exp}); ++a; ++b; }
  }
  m.powers_.insert(m.powers_.end(), a, powers_.end());
  m.powers_.insert(m.powers_.end(), b, o.powers_.end());
  m.weight_ = weight_ + o.weight_;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (weight_ > o.weight_ || powers_.size() > o.powers_.size()) return false;
  auto b = o.powers_.begin();
  for (const auto& p : powers_) {
    while (b != o.powers_.end() && b->var < p.var) ++b;
    if (b == o.powers_.end() || b->var != p.var || b->exp < p.exp) return false;
    ++b;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& d) const {
  Monomial m;
  auto b = d.powers_.begin();
  for (const auto& p : powers_) {
    if (b != d.powers_.end() && b->var == p.var) {
      if (p.exp > b->exp) m.powers_.push_back({p.var, p.exp - b->exp});
      ++b;
    } else {
      m.powers_.push_back(p);
    }
  }
  m.weight_ = weight_ - d.weight_;
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m;
  auto a = powers_.begin(), b = o.powers_.begin();
  while (a != powers_.end() && b != o.powers_.end()) {
    if (a->var < b->var) m.powers_.push_back(*a++);
    else if (b->var < a->var) m.powers_.push_back(*b++);
    else { m.powers_.push_back({a->var, std::max(a->exp, b->exp)}); ++a; ++b; }
  }
  m.powers_.insert(m.powers_.end(), a, powers_.end());
  m.powers_.insert(m.powers_.end(), b, o.powers_.end());
  m.recompute_weight();
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  auto a = powers_.begin(), b = o.powers_.begin();
  while (a != powers_.end() && b != o.powers_.end()) {
    if (a->var < b->var) ++a;
    else if (b->var < a->var) ++b;
    else return false;
  }
  return true;
}

Monomial Monomial::without(VarId v) const {
  Monomial m;
  for (const auto& p : powers_)
    if (p.var != v) m.powers_.push_back(p);
  m.recompute_weight();
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& p : powers_) {
    h ^= (static_cast<std::size_t>(p.var.key()) << 8) ^ p.exp;
    h *= 1099511628211ull;
  }
  return h;
}

int monomial_compare(const Monomial& a, const Monomial& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  auto ia = pa.begin(), ib = pb.begin();
  while (ia != pa.end() && ib != pb.end()) {
    if (ia->var != ib->var) return ia->var < ib->var ? 1 : -1;
    if (ia->exp != ib->exp) return ia->exp < ib->exp ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != pa.end()) return 1;
  if (ib != pb.end()) return -1;
  return 0;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) {
  if (c) terms_.push_back({Monomial(), mpz_class(c)});
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::var(VarId v) { return term(Monomial::of(v), 1); }

Polynomial Polynomial::term(Monomial m, mpz_class c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return monomial_compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (out.size() >= 2 && out[out.size() - 2].coeff == 0) out.erase(out.end() - 2);
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const mpz_class& ca, const mpz_class& cb) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    int c = monomial_compare(ia->mono, ib->mono);
    if (c > 0) {
      out.push_back({ia->mono, ca * ia->coeff});
      ++ia;
    } else if (c < 0) {
      out.push_back({ib->mono, cb * ib->coeff});
      ++ib;
    } else {
      mpz_class s = ca * ia->coeff + cb * ib->coeff;
      if (s != 0) out.push_back({ia->mono, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.end(); ++ia) out.push_back({ia->mono, ca * ia->coeff});
  for (; ib != b.end(); ++ib) out.push_back({ib->mono, cb * ib->coeff});
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, 1, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, 1, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      auto [it, fresh] = acc.try_emplace(ta.mono * tb.mono);
      if (fresh) it->second = ta.coeff * tb.coeff;
      else it->second += ta.coeff * tb.coeff;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return monomial_compare(x.mono, y.mono) > 0;
  });
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].coeff != b.terms_[k].coeff || !(a.terms_[k].mono == b.terms_[k].mono))
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1), base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::div_exact(const mpz_class& c) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return p;
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (terms_[0].coeff < 0) g = -g;
  if (g == 1) return *this;
  return div_exact(g);
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> vs;
  for (const auto& t : terms_)
    for (const auto& p : t.mono.powers()) vs.push_back(p.var);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool Polynomial::contains(VarId v) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(v)) return true;
  return false;
}

std::uint32_t Polynomial::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

namespace {
std::string render_terms(const Polynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpz_class c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    bool one = t.mono.is_one();
    if (c != 1 || one) {
      os << c.get_str();
      if (!one) os << (latex ? " " : "*");
    }
    bool firstvar = true;
    for (const auto& vp : t.mono.powers()) {
      if (!firstvar) os << (latex ? " " : "*");
      firstvar = false;
      os << (latex ? vp.var.latex() : vp.var.text());
      if (vp.exp > 1) {
        if (latex) os << "^{" << vp.exp << "}";
        else os << "^" << vp.exp;
      }
    }
  }
  return os.str();
}
}  // namespace

std::string Polynomial::text() const { return render_terms(*this, false); }
std::string Polynomial::latex() const { return render_terms(*this, true); }

std::string Polynomial::json() const {
  nlohmann::ordered_json j;
  j["vars"] = nlohmann::ordered_json::array();
  for (VarId v : variables()) j["vars"].push_back(v.text());
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : terms_) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (const auto& vp : t.mono.powers()) exps[vp.var.text()] = vp.exp;
    j["terms"].push_back({{"exps", exps}, {"coeff", t.coeff.get_str()}});
  }
  return j.dump();
}

std::string Polynomial::render(Format f) const {
  switch (f) {
    case Format::Text: return text();
    case Format::Latex: return latex();
    case Format::Json: return json();
  }
  return text();
}

Polynomial polynomial_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad polynomial JSON: ") + e.what());
  }
  if (!j.contains("terms") || !j["terms"].is_array())
    fail(ErrorCode::InvalidArgument, "polynomial JSON needs a 'terms' array");
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    std::vector<VarPower> pw;
    if (t.contains("exps"))
      for (auto it = t["exps"].begin(); it != t["exps"].end(); ++it)
        pw.push_back({VarId::parse(it.key()), it.value().get<std::uint32_t>()});
    mpz_class c;
    if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0)
      fail(ErrorCode::InvalidArgument, "bad coefficient in polynomial JSON");
    terms.push_back({Monomial::from_powers(std::move(pw)), c});
  }
  return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------- operations

Polynomial derivative(const Polynomial& p, VarId v) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exponent(v);
    if (!e) continue;
    std::vector<VarPower> pw = t.mono.powers();
    for (auto& vp : pw)
      if (vp.var == v) vp.exp -= 1;
    out.push_back({Monomial::from_powers(std::move(pw)), t.coeff * e});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial substitute(const Polynomial& p, const Substitution& sigma) {
  // Cache powers of each image.
  std::unordered_map<VarId, std::vector<Polynomial>, VarIdHash> powers;
  auto power_of = [&](VarId v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) {
      cache.push_back(Polynomial(1));
      cache.push_back(sigma.images.at(v));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  std::vector<Polynomial> pieces;
  pieces.reserve(p.size());
  for (const auto& t : p.terms()) {
    Polynomial term(t.coeff);
    std::vector<VarPower> kept;
    for (const auto& vp : t.mono.powers()) {
      if (sigma.images.count(vp.var)) {
        term *= power_of(vp.var, vp.exp);
        if (term.is_zero()) break;
      } else if (sigma.keep_unmapped ||
                 std::find(sigma.fixed.begin(), sigma.fixed.end(), vp.var) != sigma.fixed.end()) {
        kept.push_back(vp);
      } else {
        fail(ErrorCode::UnmappedVariable, "variable " + vp.var.text() + " is neither mapped nor fixed");
      }
    }
    if (term.is_zero()) continue;
    if (!kept.empty()) term = term.mul_term(Monomial::from_powers(std::move(kept)), 1);
    pieces.push_back(std::move(term));
  }
  // Pairwise summation keeps merges balanced.
  while (pieces.size() > 1) {
    std::vector<Polynomial> next;
    next.reserve((pieces.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < pieces.size(); k += 2) next.push_back(pieces[k] + pieces[k + 1]);
    if (pieces.size() % 2) next.push_back(std::move(pieces.back()));
    pieces = std::move(next);
  }
  return pieces.empty() ? Polynomial() : std::move(pieces[0]);
}

Polynomial lambda_coefficient(const Polynomial& p, unsigned k) {
  const VarId lam = VarId::lambda();
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (t.mono.exponent(lam) == k) out.push_back({t.mono.without(lam), t.coeff});
  return Polynomial::from_terms(std::move(out));
}

GradedDegree graded_degree(const Polynomial& p) {
  GradedDegree g;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (t.mono.has_ungraded())
      fail(ErrorCode::UngradedVariable, "polynomial contains an ungraded variable");
    if (first) g.degree = t.mono.weight();
    else if (t.mono.weight() != g.degree) g.homogeneous = false;
    g.degree = std::max(g.degree, t.mono.weight());
    first = false;
  }
  return g;
}

mpq_class evaluate(const Polynomial& p, const RationalPoint& pt) {
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    mpq_class v = t.coeff;
    for (const auto& vp : t.mono.powers()) {
      auto it = pt.find(vp.var);
      if (it == pt.end())
        fail(ErrorCode::UnmappedVariable, "no value for " + vp.var.text());
      mpq_class base = it->second, acc = 1;
      for (std::uint32_t e = 0; e < vp.exp; ++e) acc *= base;
      v *= acc;
    }
    sum += v;
  }
  return sum;
}

// ---------------------------------------------------------------- matrices

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::SizeMismatch, "matrix product size mismatch");
  PolyMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rs,
                                 const std::vector<std::size_t>& cs) const {
  PolyMatrix m(rs.size(), cs.size());
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) m(a, b) = (*this)(rs[a], cs[b]);
  return m;
}

Polynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) fail(ErrorCode::NonSquare, "determinant of a non-square matrix");
  if (n == 0) return Polynomial(1);
  if (n > 20) fail(ErrorCode::InvalidArgument, "determinant size too large");
  // memo[S] = det of rows (n-|S|)..n-1 restricted to the columns in S.
  std::vector<Polynomial> memo(std::size_t{1} << n);
  memo[0] = Polynomial(1);
  for (std::uint32_t S = 1; S < memo.size(); ++S) {
    const std::size_t k = n - static_cast<std::size_t>(std::popcount(S));
    Polynomial acc;
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(S >> c & 1u)) continue;
      const Polynomial& a = m(k, c);
      if (!a.is_zero()) {
        const Polynomial& minor = memo[S & ~(1u << c)];
        if (!minor.is_zero()) {
          if (pos % 2) acc -= a * minor;
          else acc += a * minor;
        }
      }
      ++pos;
    }
    memo[S] = std::move(acc);
  }
  return memo.back();
}

}  // namespace hessq
