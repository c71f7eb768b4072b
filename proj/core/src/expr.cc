// Copyright 2026 The Coherent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coherent/expr.h"

#include <mpfr.h>

#include <cctype>
#include <memory>

#include "coherent/errors.h"

namespace coherent {
namespace {

constexpr mpfr_prec_t kPrecision = 256;

class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, kPrecision); }
  ~BigFloat() { mpfr_clear(v_); }
  BigFloat(const BigFloat& other) : BigFloat() {
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  BigFloat& operator=(const BigFloat& other) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
  }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  BigFloat Parse() {
    BigFloat v = Expr();
    SkipSpace();
    if (pos_ != text_.size()) {
      throw InputError("trailing characters in expression: " + text_);
    }
    return v;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool Eat(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BigFloat Expr() {
    BigFloat v = Term();
    while (true) {
      if (Eat('+')) {
        BigFloat r = Term();
        mpfr_add(v.get(), v.get(), r.get(), MPFR_RNDN);
      } else if (Eat('-')) {
        BigFloat r = Term();
        mpfr_sub(v.get(), v.get(), r.get(), MPFR_RNDN);
      } else {
        return v;
      }
    }
  }

  BigFloat Term() {
    BigFloat v = Factor();
    while (true) {
      if (Eat('*')) {
        BigFloat r = Factor();
        mpfr_mul(v.get(), v.get(), r.get(), MPFR_RNDN);
      } else if (Eat('/')) {
        BigFloat r = Factor();
        if (mpfr_zero_p(r.get())) throw InputError("division by zero");
        mpfr_div(v.get(), v.get(), r.get(), MPFR_RNDN);
      } else {
        return v;
      }
    }
  }

  BigFloat Factor() {
    SkipSpace();
    if (Eat('-')) {
      BigFloat v = Factor();
      mpfr_neg(v.get(), v.get(), MPFR_RNDN);
      return v;
    }
    if (Eat('(')) {
      BigFloat v = Expr();
      if (!Eat(')')) throw InputError("missing ')' in expression");
      return v;
    }
    if (pos_ < text_.size() &&
        std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::string name;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        name.push_back(text_[pos_++]);
      }
      if (!Eat('(')) throw InputError("expected '(' after " + name);
      BigFloat arg = Expr();
      if (!Eat(')')) throw InputError("missing ')' in expression");
      if (mpfr_sgn(arg.get()) <= 0) {
        throw InputError("logarithm of a non-positive value");
      }
      BigFloat v;
      if (name == "log") {
        mpfr_log(v.get(), arg.get(), MPFR_RNDN);
      } else if (name == "log2") {
        mpfr_log2(v.get(), arg.get(), MPFR_RNDN);
      } else {
        throw InputError("unknown function '" + name + "'");
      }
      return v;
    }
    return Number();
  }

  BigFloat Number() {
    SkipSpace();
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ == start) throw InputError("expected a number in expression");
    BigFloat v;
    if (mpfr_set_str(v.get(), text_.substr(start, pos_ - start).c_str(), 10,
                     MPFR_RNDN) != 0) {
      throw InputError("bad number in expression");
    }
    return v;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

Rat EvalExpr(const std::string& text) {
  Parser parser(text);
  BigFloat v = parser.Parse();
  if (!mpfr_number_p(v.get())) {
    throw InputError("expression did not evaluate to a finite number");
  }
  // Exact rational of the 256-bit value: mantissa * 2^exp.
  mpz_class mantissa;
  const mpfr_exp_t exp =
      mpfr_get_z_2exp(mantissa.get_mpz_t(), v.get());
  Rat r(mantissa);
  if (exp >= 0) {
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(exp));
    r *= Rat(shift);
  } else {
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(-exp));
    r /= Rat(shift);
  }
  r.canonicalize();
  return r;
}

}  // namespace coherent
