#pragma once

namespace qirw {

// checked: every theorem postcondition swept in full.
// fast: preconditions and final certification only, quadratic sweeps sampled.
enum class Profile { Checked, Fast };

} // namespace qirw
