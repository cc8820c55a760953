#pragma once

#include "momest/types.hpp"

#include <string>

namespace momest {

/// Instance file format (weights-v1):
///   line 1:        weights-v1 <n>
///   lines 2..n+1:  one decimal weight per line, 17 significant digits
///   trailing:      optional comment lines starting with '#'
/// A `# label: <tag>` trailing comment round-trips the instance label.
std::string serialize_instance(const WeightedInstance& inst);

/// Parses the weights-v1 format. Throws IoError on malformed input; the
/// parsed instance is validated (InvalidWeight / EmptyInstance surface).
WeightedInstance parse_instance(const std::string& text);

WeightedInstance read_instance(const std::string& path);

/// Refuses to overwrite an existing file unless `overwrite` is set.
void write_instance(const WeightedInstance& inst, const std::string& path,
                    bool overwrite = false);

/// 17-significant-digit float formatting shared by the file formats.
std::string format_g17(double value);

} // namespace momest
