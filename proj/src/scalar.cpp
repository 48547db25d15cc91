#include "hecke/scalar.hpp"

#include <cctype>
#include <sstream>

namespace hecke {

ParamSet::ParamSet(Variant v, int ell, std::string hecke, std::vector<std::string> cyclo)
    : variant_(v), ell_(ell), hecke_symbol_(std::move(hecke)), cyclo_symbols_(std::move(cyclo)) {
  if (ell_ < 1) throw std::invalid_argument("ParamSet: ell must be >= 1");
  for (size_t i = 0; i < cyclo_symbols_.size(); ++i) {
    if (variant_ == Variant::NonDegenerate && cyclo_symbols_[i] == hecke_symbol_)
      throw std::invalid_argument("ParamSet: symbol names must be distinct");
    for (size_t j = i + 1; j < cyclo_symbols_.size(); ++j)
      if (cyclo_symbols_[i] == cyclo_symbols_[j])
        throw std::invalid_argument("ParamSet: symbol names must be distinct");
  }
}

ParamSet ParamSet::nondegenerate(int ell) {
  std::vector<std::string> cyclo;
  for (int s = 1; s <= ell; ++s) cyclo.push_back("Q" + std::to_string(s));
  return ParamSet(Variant::NonDegenerate, ell, "q", std::move(cyclo));
}

ParamSet ParamSet::degenerate(int ell) {
  std::vector<std::string> cyclo;
  for (int s = 1; s <= ell; ++s) cyclo.push_back("u" + std::to_string(s));
  return ParamSet(Variant::Degenerate, ell, "", std::move(cyclo));
}

Scalar Scalar::zero(const ParamSet& p) {
  Scalar s;
  s.variant_ = p.variant();
  s.ell_ = p.ell();
  return s;
}

Scalar Scalar::one(const ParamSet& p) { return integer(1, p); }

Scalar Scalar::integer(long v, const ParamSet& p) { return integer(mpz_class(v), p); }

Scalar Scalar::integer(const mpz_class& v, const ParamSet& p) {
  return monomial(v, Monomial{0, std::vector<int>(p.ell(), 0)}, p);
}

Scalar Scalar::q_power(int k, const ParamSet& p) {
  if (p.variant() == Variant::Degenerate)
    throw DomainMismatchError("q_power: degenerate variant has no Hecke parameter");
  return monomial(1, Monomial{k, std::vector<int>(p.ell(), 0)}, p);
}

Scalar Scalar::cyclo(int s, const ParamSet& p) {
  if (s < 1 || s > p.ell()) throw std::out_of_range("cyclo: index out of range");
  Monomial m{0, std::vector<int>(p.ell(), 0)};
  m.cyc_exp[s - 1] = 1;
  return monomial(1, m, p);
}

Scalar Scalar::monomial(const mpz_class& coeff, const Monomial& m, const ParamSet& p) {
  if (static_cast<int>(m.cyc_exp.size()) != p.ell())
    throw std::invalid_argument("monomial: exponent vector size mismatch");
  if (p.variant() == Variant::Degenerate && m.q_exp != 0)
    throw DomainMismatchError("monomial: q-exponent unused in degenerate variant");
  for (int e : m.cyc_exp)
    if (e < 0) throw std::invalid_argument("monomial: cyclotomic exponents must be natural");
  Scalar s = zero(p);
  if (coeff != 0) s.terms_[m] = coeff;
  return s;
}

Scalar Scalar::rational(const mpq_class& v, const ParamSet& p) {
  Scalar s = zero(p);
  s.rational_mode_ = true;
  s.value_ = v;
  s.value_.canonicalize();
  return s;
}

bool Scalar::is_zero() const { return rational_mode_ ? value_ == 0 : terms_.empty(); }

const mpq_class& Scalar::rational_value() const {
  if (!rational_mode_) throw DomainMismatchError("rational_value: scalar is symbolic");
  return value_;
}

void Scalar::check_compatible(const Scalar& o) const {
  if (!is_compatible(o))
    throw DomainMismatchError("scalar operands have mismatched parameter sets or modes");
}

void Scalar::purge_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (rational_mode_) {
    r.value_ = -r.value_;
  } else {
    for (auto& [m, c] : r.terms_) c = -c;
  }
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_compatible(o);
  Scalar r = *this;
  if (rational_mode_) {
    r.value_ += o.value_;
    return r;
  }
  for (const auto& [m, c] : o.terms_) r.terms_[m] += c;
  r.purge_zeros();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_compatible(o);
  if (rational_mode_) {
    Scalar r = *this;
    r.value_ *= o.value_;
    return r;
  }
  Scalar r;
  r.variant_ = variant_;
  r.ell_ = ell_;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      m.q_exp += mb.q_exp;
      for (int i = 0; i < ell_; ++i) m.cyc_exp[i] += mb.cyc_exp[i];
      r.terms_[m] += ca * cb;
    }
  }
  r.purge_zeros();
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (variant_ != o.variant_ || ell_ != o.ell_ || rational_mode_ != o.rational_mode_) return false;
  return rational_mode_ ? value_ == o.value_ : terms_ == o.terms_;
}

Scalar Scalar::divided_by(const Scalar& o) const {
  check_compatible(o);
  if (!rational_mode_)
    throw DomainMismatchError("divided_by: division requires specialized mode");
  if (o.value_ == 0) throw NotSeparatedError("divided_by: zero denominator");
  Scalar r = *this;
  r.value_ /= o.value_;
  return r;
}

mpq_class q_int_pow(const mpq_class& base, int e) {
  if (e == 0) return 1;
  mpq_class b = base;
  if (e < 0) {
    if (base == 0) throw std::domain_error("q_int_pow: zero base with negative exponent");
    b = 1 / base;
    e = -e;
  }
  mpq_class r = 1;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::specialized(const Specialization& sp) const {
  if (rational_mode_) throw DomainMismatchError("specialized: scalar already rational");
  if (sp.variant() != variant_ || sp.ell() != ell_)
    throw DomainMismatchError("specialized: specialization does not match parameter set");
  mpq_class acc = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class term(c);
    if (m.q_exp != 0) term *= q_int_pow(sp.q_value(), m.q_exp);
    for (int s = 1; s <= ell_; ++s)
      if (m.cyc_exp[s - 1] != 0) term *= q_int_pow(sp.param_value(s), m.cyc_exp[s - 1]);
    acc += term;
  }
  ParamSet p = variant_ == Variant::NonDegenerate ? ParamSet::nondegenerate(ell_)
                                                  : ParamSet::degenerate(ell_);
  return rational(acc, p);
}

namespace {

void append_factor(std::string& out, const std::string& sym, int exp) {
  if (exp == 0) return;
  if (!out.empty()) out += "*";
  out += sym;
  if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

std::string Scalar::to_string() const {
  if (rational_mode_) return value_.get_str();
  if (terms_.empty()) return "0";
  ParamSet p = variant_ == Variant::NonDegenerate ? ParamSet::nondegenerate(ell_)
                                                  : ParamSet::degenerate(ell_);
  std::string out;
  for (const auto& [m, c] : terms_) {
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    if (variant_ == Variant::NonDegenerate) append_factor(factors, p.hecke_symbol(), m.q_exp);
    for (int s = 1; s <= ell_; ++s) append_factor(factors, p.cyclo_symbol(s), m.cyc_exp[s - 1]);
    if (factors.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

nlohmann::json Scalar::to_json() const {
  if (rational_mode_) return nlohmann::json{{"rational", value_.get_str()}};
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json t{{"coeff", c.get_str()}, {"exp", m.cyc_exp}};
    if (variant_ == Variant::NonDegenerate) t["q"] = m.q_exp;
    terms.push_back(std::move(t));
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

Scalar Scalar::from_json(const nlohmann::json& j, const ParamSet& p) {
  if (j.contains("rational"))
    return rational(mpq_class(j.at("rational").get<std::string>()), p);
  Scalar r = zero(p);
  for (const auto& t : j.at("terms")) {
    Monomial m;
    m.q_exp = t.value("q", 0);
    m.cyc_exp = t.at("exp").get<std::vector<int>>();
    r += monomial(mpz_class(t.at("coeff").get<std::string>()), m, p);
  }
  return r;
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  const ParamSet& params;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("scalar parse: expected integer");
    return std::stol(text.substr(start, pos - start));
  }

  std::string parse_symbol() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])))) ++pos;
    return text.substr(start, pos - start);
  }

  Scalar parse_term(bool negative) {
    mpz_class coeff = negative ? -1 : 1;
    Monomial m{0, std::vector<int>(params.ell(), 0)};
    bool any = false;
    skip_ws();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      coeff *= mpz_class(text.substr(start, pos - start));
      any = true;
      if (!eat('*')) return Scalar::monomial(coeff, m, params);
    }
    while (true) {
      std::string sym = parse_symbol();
      if (sym.empty()) {
        if (!any) throw std::invalid_argument("scalar parse: empty term");
        break;
      }
      any = true;
      int exp = 1;
      if (eat('^')) exp = static_cast<int>(parse_int());
      if (params.variant() == Variant::NonDegenerate && sym == params.hecke_symbol()) {
        m.q_exp += exp;
      } else {
        bool found = false;
        for (int s = 1; s <= params.ell(); ++s)
          if (sym == params.cyclo_symbol(s)) {
            m.cyc_exp[s - 1] += exp;
            found = true;
            break;
          }
        if (!found) throw std::invalid_argument("scalar parse: unknown symbol '" + sym + "'");
      }
      if (!eat('*')) break;
    }
    return Scalar::monomial(coeff, m, params);
  }
};

}  // namespace

Scalar Scalar::from_string(const std::string& text, const ParamSet& p) {
  if (text.find('/') != std::string::npos) return rational(mpq_class(text), p);
  Parser parser{text, 0, p};
  parser.skip_ws();
  if (parser.pos >= text.size()) throw std::invalid_argument("scalar parse: empty input");
  if (text.compare(parser.pos, 1, "0") == 0 && parser.pos + 1 == text.size()) return zero(p);
  // Parse as integer-only rational when no symbols occur at all.
  bool has_alpha = false;
  for (char ch : text)
    if (std::isalpha(static_cast<unsigned char>(ch))) has_alpha = true;
  Scalar acc = zero(p);
  bool negative = parser.eat('-');
  if (!negative) parser.eat('+');
  while (true) {
    acc += parser.parse_term(negative);
    parser.skip_ws();
    if (parser.pos >= text.size()) break;
    if (parser.eat('+')) {
      negative = false;
    } else if (parser.eat('-')) {
      negative = true;
    } else {
      throw std::invalid_argument("scalar parse: unexpected character at " +
                                  std::to_string(parser.pos));
    }
  }
  (void)has_alpha;
  return acc;
}

Specialization::Specialization(Variant variant, mpq_class q_value,
                               std::vector<mpq_class> param_values)
    : variant_(variant), q_value_(std::move(q_value)), param_values_(std::move(param_values)) {
  q_value_.canonicalize();
  for (auto& v : param_values_) v.canonicalize();
  if (param_values_.empty()) throw std::invalid_argument("Specialization: ell must be >= 1");
  if (variant_ == Variant::NonDegenerate && (q_value_ == 0 || q_value_ == 1))
    throw std::invalid_argument("Specialization: q must avoid {0,1}");
}

Specialization Specialization::nondegenerate(mpq_class q_value, std::vector<mpq_class> q_params) {
  return Specialization(Variant::NonDegenerate, std::move(q_value), std::move(q_params));
}

Specialization Specialization::degenerate(std::vector<mpq_class> u_params) {
  return Specialization(Variant::Degenerate, 0, std::move(u_params));
}

nlohmann::json Specialization::to_json() const {
  nlohmann::json j{{"variant", variant_name(variant_)}};
  if (variant_ == Variant::NonDegenerate) j["q"] = q_value_.get_str();
  std::vector<std::string> vals;
  for (const auto& v : param_values_) vals.push_back(v.get_str());
  j["params"] = vals;
  return j;
}

bool is_separated(const Specialization& sp, int n, const ParamSet& params) {
  if (n < 1) throw std::invalid_argument("is_separated: n must be >= 1");
  if (sp.variant() != params.variant() || sp.ell() != params.ell())
    throw DomainMismatchError("is_separated: specialization/parameter mismatch");
  int ell = params.ell();
  if (params.variant() == Variant::NonDegenerate) {
    const mpq_class& q = sp.q_value();
    mpq_class qsum = 0, qpow = 1;
    for (int k = 1; k <= n; ++k) {
      qsum += qpow;  // 1 + q + ... + q^{k-1}
      qpow *= q;
      if (qsum == 0) return false;
    }
    for (int i = 1; i <= ell; ++i)
      for (int j = i + 1; j <= ell; ++j)
        for (int d = -(n - 1); d <= n - 1; ++d)
          if (q_int_pow(q, d) * sp.param_value(i) - sp.param_value(j) == 0) return false;
    return true;
  }
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= ell; ++j) {
      if (i == j) continue;
      mpq_class diff = sp.param_value(i) - sp.param_value(j);
      for (int d = -(n - 1); d <= n - 1; ++d)
        if (diff == d) return false;
    }
  return true;
}

}  // namespace hecke
