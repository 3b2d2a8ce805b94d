#pragma once

#include <string>
#include <string_view>

#include "glho/homotopy.hpp"
#include "glho/interval.hpp"
#include "glho/kseries.hpp"
#include "glho/partition.hpp"
#include "glho/weight.hpp"

namespace glho {

/// Weight syntax: "1,0,-1|2,0" (comma-separated halves, bar in between).
Weight parse_weight(std::string_view text);
std::string format_weight(const Weight& w);

/// Block-object syntax: "R[0,3] + 2*B[1,2] + P(0) + L(4)"; "0" is the
/// zero object.
BlockObject parse_block_object(std::string_view text);
std::string format_block_object(const BlockObject& x);

/// Homotopy-object syntax: "S(2) + EvenR[0,3]"; "0" is the zero object.
HoObject parse_ho_object(std::string_view text);
std::string format_ho_object(const HoObject& x);

/// Partition syntax: comma-separated parts, "" or "0" for the empty one.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

/// Flag syntax: "V(1)@1 + V(0)@0" (label at degree), also comma-separated.
KacFlagInput parse_flag(std::string_view text);

std::string format_flag_label(const FlagLabel& l);

}  // namespace glho
