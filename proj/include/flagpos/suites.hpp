#pragma once

#include <cstdint>
#include <vector>

#include "flagpos/counterexamples.hpp"
#include "flagpos/pinning.hpp"
#include "flagpos/positivity.hpp"
#include "flagpos/report.hpp"
#include "flagpos/weyl.hpp"

namespace flagpos {

// Report builders behind the command line subcommands.
Report verify_pinning_report(const GroupDescriptor& g);
Report fold_report(const Word& w);
Report counterexample_report(const Construction& c);
Report catalog_report();
Report pfaffian_demo_report(const std::vector<Quad>& t);
Report plucker_report(const Matrix& m, int k);
// exhaustive: every element and every reduced word; otherwise w0 plus a seeded spot set.
Report weyl_distinguished_report(const RootSystem& sys, bool exhaustive, std::uint64_t seed);

SystemType parse_system(const std::string& s);
Matrix matrix_from_json(const std::string& text);

}  // namespace flagpos
