#include <sstream>

#include "planarq/gf.hpp"

namespace planarq::gf {

namespace {

void check_same(const GaloisField* a, const GaloisField* b) {
  if (a != b) throw LevelMismatch("operands belong to different fields");
}

}  // namespace

GfElement GfElement::inv() const { return {field_, field_->inv(code_)}; }

GfElement GfElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

GfElement operator+(GfElement a, GfElement b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_->add(a.code_, b.code_)};
}

GfElement operator-(GfElement a, GfElement b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_->sub(a.code_, b.code_)};
}

GfElement operator*(GfElement a, GfElement b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.code_, b.code_)};
}

GfElement operator/(GfElement a, GfElement b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.code_, a.field_->inv(b.code_))};
}

GfElement GfElement::operator-() const { return {field_, field_->neg(code_)}; }

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw NotOddPrime(std::to_string(p) + " is not prime");
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw InvalidModulus("modulus must be monic of degree >= 1");
  }
  for (auto c : modulus_) {
    if (c >= p) throw InvalidModulus("modulus coefficient out of range");
  }
  m_ = static_cast<unsigned>(modulus_.size() - 1);
  const std::uint64_t q = checked_pow(p, m_);
  if (q > kMaxOrder) {
    throw SizeLimit("field order " + std::to_string(q) + " exceeds the table limit " +
                    std::to_string(kMaxOrder));
  }
  q_ = static_cast<std::uint32_t>(q);
  if (m_ > 1 && !is_irreducible(*prime(p), modulus_)) {
    throw InvalidModulus("modulus is reducible over F_" + std::to_string(p));
  }

  place_.resize(m_);
  place_[0] = 1;
  for (unsigned i = 1; i < m_; ++i) place_[i] = place_[i - 1] * p;

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto d = digits(a);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = pack(d);
  }

  if (q_ == 2) {
    exp_ = {1, 1};
    log_ = {0, 0};
  } else {
    const auto factors = prime_factors(q_ - 1);
    auto slow_pow = [&](std::vector<std::uint32_t> base, std::uint64_t e) {
      std::vector<std::uint32_t> r(m_, 0);
      r[0] = 1;
      while (e > 0) {
        if (e & 1) r = slow_mul(r, base);
        base = slow_mul(base, base);
        e >>= 1;
      }
      return r;
    };
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q_ && g == 0; ++cand) {
      const auto cd = digits(cand);
      bool primitive = true;
      for (auto r : factors) {
        if (pack(slow_pow(cd, (q_ - 1) / r)) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) g = cand;
    }
    if (g == 0) throw InvalidModulus("no primitive element found");
    exp_.resize(2 * static_cast<std::size_t>(q_ - 1));
    log_.assign(q_, 0);
    const auto gd = digits(g);
    std::vector<std::uint32_t> cur(m_, 0);
    cur[0] = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      const auto c = pack(cur);
      exp_[i] = c;
      exp_[i + q_ - 1] = c;
      log_[c] = i;
      cur = slow_mul(cur, gd);
    }
  }

  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      const auto da = digits(a);
      for (std::uint32_t b = 0; b < q_; ++b) {
        auto db = digits(b);
        for (unsigned i = 0; i < m_; ++i) db[i] = (db[i] + da[i]) % p_;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(pack(db));
      }
    }
  }
}

std::shared_ptr<const GaloisField> GaloisField::prime(std::uint32_t p) {
  return std::make_shared<const GaloisField>(p, std::vector<std::uint32_t>{0, 1});
}

std::shared_ptr<const GaloisField> GaloisField::create(std::uint32_t p, unsigned m) {
  if (m == 0) throw InvalidModulus("extension degree must be positive");
  if (!is_prime(p)) throw NotOddPrime(std::to_string(p) + " is not prime");
  if (checked_pow(p, m) > kMaxOrder) {
    throw SizeLimit("field order " + std::to_string(p) + "^" + std::to_string(m) +
                    " exceeds the table limit");
  }
  auto fp = prime(p);
  if (m == 1) return fp;
  return std::make_shared<const GaloisField>(p, find_irreducible(*fp, m));
}

std::shared_ptr<const GaloisField> GaloisField::create(std::uint32_t p,
                                                       std::vector<std::uint32_t> modulus) {
  return std::make_shared<const GaloisField>(p, std::move(modulus));
}

GfElement GaloisField::element(std::uint32_t code) const {
  if (code >= q_) throw Error("code " + std::to_string(code) + " out of range for " + describe());
  return {this, code};
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  if (m_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t s = a % p_ + b % p_;
    r += (s >= p_ ? s - p_ : s) * place_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in " + describe());
  if (q_ == 2) return 1;
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (q_ == 2) return 1;
  const std::uint64_t n = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % n)) % n];
}

std::uint32_t GaloisField::int_code(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(((v % p) + p) % p);
}

std::vector<std::uint32_t> GaloisField::digits(std::uint32_t code) const {
  std::vector<std::uint32_t> d(m_);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

std::uint32_t GaloisField::pack(const std::vector<std::uint32_t>& d) const {
  std::uint32_t r = 0;
  for (unsigned i = m_; i-- > 0;) r = r * p_ + d[i];
  return r;
}

std::vector<std::uint32_t> GaloisField::slow_mul(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) const {
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
  }
  for (std::size_t k = prod.size(); k-- > m_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[k - m_ + j] = (prod[k - m_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
    prod[k] = 0;
  }
  std::vector<std::uint32_t> r(m_);
  for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) {
    os << "^" << m_ << ") mod ";
    bool first = true;
    for (unsigned i = m_ + 1; i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (modulus_[i] != 1 || i == 0) os << modulus_[i];
      if (i > 0) os << (modulus_[i] != 1 ? "*" : "") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    }
  } else {
    os << ")";
  }
  return os.str();
}

}  // namespace planarq::gf
