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

#include "coherent/rational.h"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "coherent/errors.h"

namespace coherent {

namespace {

// Parses a plain decimal literal (no slash) with optional exponent.
Rat ParseDecimal(const std::string& s) {
  std::string digits;
  digits.reserve(s.size());
  bool negative = false;
  long frac_digits = 0;
  long exponent = 0;
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  bool any_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    digits.push_back(s[i]);
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
         ++i) {
      digits.push_back(s[i]);
      ++frac_digits;
      any_digit = true;
    }
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      exp_neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw InputError("bad numeric literal: " + s);
    long e = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
         ++i) {
      e = e * 10 + (s[i] - '0');
      if (e > 100000) throw InputError("exponent out of range: " + s);
    }
    exponent = exp_neg ? -e : e;
  }
  if (!any_digit || i != s.size()) {
    throw InputError("bad numeric literal: " + s);
  }
  Int numerator;
  if (mpz_set_str(numerator.get_mpz_t(),
                  digits.empty() ? "0" : digits.c_str(), 10) != 0) {
    throw InputError("bad numeric literal: " + s);
  }
  if (negative) numerator = -numerator;
  long shift = exponent - frac_digits;
  Rat result(numerator);
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(
                                            shift >= 0 ? shift : -shift));
  if (shift >= 0) {
    result *= Rat(pow10);
  } else {
    result /= Rat(pow10);
  }
  result.canonicalize();
  return result;
}

}  // namespace

Rat RatFromString(const std::string& s) {
  if (s.empty()) throw InputError("empty numeric literal");
  const size_t slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty() ||
        num.find_first_not_of("+-0123456789") != std::string::npos ||
        den.find_first_not_of("+-0123456789") != std::string::npos) {
      throw InputError("bad rational literal: " + s);
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) {
      throw InputError("bad rational literal: " + s);
    }
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
      throw InputError("zero denominator: " + s);
    }
    r.canonicalize();
    return r;
  }
  return ParseDecimal(s);
}

std::string RatToString(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double ToDouble(const Rat& r) { return r.get_d(); }

Rat RatFromDouble(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value");
  Rat r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

Int LcmOfDenominators(std::span<const Rat> values) {
  Int l = 1;
  for (const Rat& v : values) {
    Int d = v.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

Rat ContinuedFractionRound(const Rat& x, const Rat& max_err) {
  if (max_err <= 0) throw InputError("max_err must be positive");
  if (x.get_den() == 1) return x;
  // Walk the continued-fraction expansion of x; the first convergent within
  // max_err has minimal denominator among approximants at that accuracy up
  // to the intermediate-fraction refinement below.
  Int p_prev = 1, q_prev = 0;  // h_{-1}/k_{-1}
  Int p = 0, q = 1;            // h_0 / k_0 seeded by first term
  Int num = x.get_num(), den = x.get_den();
  bool first = true;
  while (true) {
    Int a, rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    Int p_next = a * (first ? Int(1) : p) + (first ? Int(0) : p_prev);
    Int q_next = a * (first ? Int(0) : q) + (first ? Int(1) : q_prev);
    if (first) {
      p_next = a;
      q_next = 1;
      p_prev = 1;
      q_prev = 0;
      first = false;
    } else {
      p_prev = p;
      q_prev = q;
    }
    p = p_next;
    q = q_next;
    Rat approx(p, q);
    approx.canonicalize();
    if (abs(approx - x) <= max_err) {
      // Try intermediate fractions (p - k*p_prev)/(q - k*q_prev) with a
      // smaller denominator that still meet the bound.
      Rat best = approx;
      Int k = 1;
      while (q - k * q_prev > 0) {
        Rat cand(p - k * p_prev, q - k * q_prev);
        if (mpz_sgn(mpq_denref(cand.get_mpq_t())) <= 0) break;
        cand.canonicalize();
        if (abs(cand - x) <= max_err) {
          best = cand;
          ++k;
        } else {
          break;
        }
      }
      return best;
    }
    if (rem == 0) return approx;  // exact representation reached
    num = den;
    den = rem;
  }
}

bool IsInteger(const Rat& r) { return r.get_den() == 1; }

}  // namespace coherent
