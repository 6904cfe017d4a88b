#pragma once

// JSON encodings of core types shared by the command implementations.

#include "toricsplit/cli.hpp"
#include "toricsplit/splitting.hpp"
#include "toricsplit/supports.hpp"

namespace toricsplit::cli {

Report encode(const Integer& z);
Report encode(const LatticeVector& v);
Report encode(const SupportSet& s);
Report encode(const IntMatrix& m);
Report encode(const Bound& b);
Report encode(const BarBounds& b);
Report encode(const SplitCertificate& c, const Configuration& a, const GeneratorSet& generators);
Report encode_generators(const GeneratorSet& g);
Report encode_values(const std::vector<CatalogueValue>& values, const std::string& characteristic);

/// Tags are compatible when either side is "any" or they agree.
bool characteristic_matches(const std::string& tag, const std::string& wanted);

}  // namespace toricsplit::cli
