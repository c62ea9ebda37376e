#pragma once

/// Rep-file loader/saver. The format is a JSON document
///   {"radix": k, "dim": d, "initial": ["p/q", ...],
///    "digit_mats": [[["p/q", ...], ...], ...], "final": ["p/q", ...]}
/// with every scalar an exact fraction string.

#include "regseq/linrep.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace regseq::linrep {

LinearRep load_rep(std::istream& is);
LinearRep load_rep(const std::filesystem::path& p);

std::string rep_to_json(const LinearRep& rep);
void save_rep(const LinearRep& rep, const std::filesystem::path& p);

} // namespace regseq::linrep
