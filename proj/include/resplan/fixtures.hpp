#pragma once

#include <string_view>

#include "resplan/domain_io.hpp"

namespace resplan::fixtures {

// Two autonomous vehicles at a junction. Each can go straight on (F) or do
// nothing; crossing succeeds when the other car is not simultaneously in the
// way, and simultaneous crossing from the start position collides. Agent A1
// does not know whether A2 has already crossed.
inline constexpr std::string_view kJunctionDomain =
    "agents: A1 A2\n"
    "props: crossed1 crossed2 collision\n"
    "actions: F\n"
    "init: {}\n"
    "epistemic A1: {} { crossed2 }\n"
    "effect+ A1 F crossed1: !(!crossed2 & do(A2,F)) & !collision\n"
    "effect+ A1 F collision: !crossed1 & !crossed2 & do(A2,F)\n"
    "effect+ A2 F crossed2: !(!crossed1 & do(A1,F)) & !collision\n";

// Two immobile agents that can lift the table next to them. A1 knows where it
// stands but not where A2 does.
inline constexpr std::string_view kTableDomain =
    "agents: A1 A2\n"
    "props: lifted_table1 lifted_table2 at_A1_table1 at_A1_table2 at_A2_table1 at_A2_table2\n"
    "actions: lift_table1 lift_table2\n"
    "init: { at_A1_table1 at_A2_table2 }\n"
    "epistemic A1: { at_A1_table1 at_A2_table2 } { at_A1_table1 at_A2_table1 }\n"
    "effect+ A1 lift_table1 lifted_table1: !lifted_table1 & at_A1_table1\n"
    "effect+ A1 lift_table2 lifted_table2: !lifted_table2 & at_A1_table2\n"
    "effect+ A2 lift_table1 lifted_table1: !lifted_table1 & at_A2_table1\n"
    "effect+ A2 lift_table2 lifted_table2: !lifted_table2 & at_A2_table2\n";

inline Ppd junction() { return parse_domain(kJunctionDomain).ppd; }
inline Ppd table_lifting() { return parse_domain(kTableDomain).ppd; }

}  // namespace resplan::fixtures
