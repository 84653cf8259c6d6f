#pragma once

#include "knotcert/bigint.hpp"

namespace knotcert {

// floor(x) - floor(-x): 2x at integers, 2 floor(x) + 1 otherwise.
Integer ind(const Rational& x);

// Colored signature of the m-cabled Hopf link with every color at -1:
// (ind(m/2) - m ind(1/2))^2. m must be odd and positive (InputError).
Integer sigma_col_hopf_cable(long m);

// Linking number m^2 of the two cabled components.
Integer linking_Lm(long m);

// sigma_col - lk = -m^2.
Integer signature_Lm(long m);

// ceil(|-m^2 + 2(m - 1)| / 2): the signature bound after banding the 2m
// components together with 2m - 2 bands.
Integer g4_bound_banded(long m);

}  // namespace knotcert
