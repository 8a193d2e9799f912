#include "ncconic/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace ncconic {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::DegreeExceedsTruncation: return "DegreeExceedsTruncation";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotSubspace: return "NotSubspace";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::SignatureUnmatched: return "SignatureUnmatched";
    case ErrorKind::NotFrobenius: return "NotFrobenius";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::PointNotOnScheme: return "PointNotOnScheme";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::NoCertificate: return "NoCertificate";
    case ErrorKind::NotFourDimensional: return "NotFourDimensional";
    case ErrorKind::MissingWitness: return "MissingWitness";
  }
  return "Error";
}

static bool squarefree(long d) {
  long m = d < 0 ? -d : d;
  for (long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

FieldSpec FieldSpec::quadratic(long d) {
  if (d == 0 || d == 1 || !squarefree(d))
    throw Error(ErrorKind::Precondition, "field parameter must be squarefree and not 0 or 1");
  return {d};
}

std::string FieldSpec::name() const {
  if (d == 0) return "Q";
  if (d == -1) return "Q(i)";
  return "Q(sqrt(" + std::to_string(d) + "))";
}

Scalar::Scalar(const mpq_class& a, const mpq_class& b, long d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 0 && sgn(b_) != 0) throw Error(ErrorKind::FieldMismatch, "irrational part over Q");
}

Scalar Scalar::sqrt_of(long d) {
  FieldSpec::quadratic(d);
  return Scalar(0, 1, d);
}

Scalar Scalar::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  q.canonicalize();
  return Scalar(q);
}

void Scalar::join(const Scalar& o) {
  if (o.d_ == 0) return;
  if (d_ == 0) {
    d_ = o.d_;
    return;
  }
  if (d_ != o.d_) throw Error(ErrorKind::FieldMismatch, "scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  join(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  join(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class na = a_ * o.a_ + b_ * o.b_ * d_;
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  return *this;
}

mpq_class Scalar::norm() const { return a_ * a_ - b_ * b_ * d_; }

Scalar Scalar::conj() const {
  Scalar r(*this);
  r.b_ = -b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (sgn(b_) == 0) {
    Scalar r(*this);
    r.a_ = 1 / a_;
    return r;
  }
  mpq_class n = norm();
  Scalar r(*this);
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1), b(*this);
  r.d_ = d_;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Scalar::str() const {
  std::string irr = d_ == -1 ? "i" : "sqrt(" + std::to_string(d_) + ")";
  if (sgn(b_) == 0) return a_.get_str();
  std::string bpart;
  if (b_ == 1)
    bpart = irr;
  else if (b_ == -1)
    bpart = "-" + irr;
  else
    bpart = b_.get_str() + "*" + irr;
  if (sgn(a_) == 0) return bpart;
  std::string s = a_.get_str();
  if (bpart[0] == '-')
    s += " - " + bpart.substr(1);
  else
    s += " + " + bpart;
  return s;
}

double Scalar::real_approx() const {
  double r = a_.get_d();
  if (d_ > 0) r += b_.get_d() * std::sqrt(double(d_));
  return r;
}

double Scalar::imag_approx() const {
  if (d_ < 0) return b_.get_d() * std::sqrt(double(-d_));
  return 0.0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar in_field(const Scalar& s, FieldSpec f) {
  if (s.d() != 0 && s.d() != f.d) throw Error(ErrorKind::FieldMismatch, "scalar not in field");
  return Scalar(s.a(), s.b(), f.d);
}

}  // namespace ncconic
