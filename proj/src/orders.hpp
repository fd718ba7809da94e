// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace gspc {

// |Sp_{2g}(F_ell)| = ell^{g^2} * prod_{j=1..g} (ell^{2j} - 1); the empty
// product gives |Sp_0| = 1.
mpz_class sp_order(unsigned g, uint64_t ell);

// |GL_r(F_ell)| = prod_{j=0..r-1} (ell^r - ell^j); |GL_0| = 1.
mpz_class gl_order(unsigned r, uint64_t ell);

// |GSp_{2g}(F_ell)| = (ell - 1) * |Sp_{2g}(F_ell)|: the multiplier character
// is surjective onto F_ell^* and each of its fibers is an Sp-coset.
mpz_class gsp_order(unsigned g, uint64_t ell);

// ell^e as a big integer.
mpz_class pow_ui(uint64_t ell, unsigned long e);

// num / den, throwing InternalError unless the division is exact.  Every
// quotient in the counting formulas is an integer; a nonzero remainder
// means the implementation, not the input, is wrong.
mpz_class exact_div(const mpz_class& num, const mpz_class& den, const char* what);

}  // namespace gspc
