#ifndef SORTAL_EXAMPLES_HPP
#define SORTAL_EXAMPLES_HPP

#include "sortal/signature.hpp"

namespace sortal {

/// STLC over one base sort b, arrow depth 1: sorts {b, b->b},
/// ops {app_b_b, lam_b_b}.
Signature stlc_example();

/// PCF: STLC over {nat, bool} (arrow depth 1) summed with Plotkin's constants:
/// zero, succ, pred, true, false, iszero, cond_s and fix_s per sort.
Signature pcf_example();

/// Pre-syntax of the calculus of constructions, two-sorted over {ty, el}:
/// Pi, lam, app, Prop, Proof, with binders for both types and terms.
Signature coc_example();

}  // namespace sortal

#endif
