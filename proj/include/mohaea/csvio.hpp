#ifndef MOHAEA_CSVIO_HPP
#define MOHAEA_CSVIO_HPP

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "mohaea/core.hpp"

namespace mohaea {

// Stable scientific formatting used for all numeric CSV output, so reruns of
// a deterministic experiment are byte-identical.
std::string format_double(double v);

// Objective-set CSV with header f1,f2[,f3].
void write_objectives_csv(std::ostream& os, const std::vector<ObjectiveVector>& points);
void write_objectives_csv(const std::filesystem::path& path, const std::vector<ObjectiveVector>& points);

// Parses a front CSV (header required); throws std::runtime_error with a
// one-line message on malformed input.
std::vector<ObjectiveVector> read_objectives_csv(const std::filesystem::path& path);

// Generic numeric table with an explicit header line.
void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);
std::vector<std::vector<double>> read_table_csv(const std::filesystem::path& path,
                                                std::vector<std::string>* header_out = nullptr);

} // namespace mohaea

#endif
