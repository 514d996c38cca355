#pragma once

#include <iosfwd>
#include <string>

#include "lct/signal.hpp"

namespace lct {

// Signal file formats (the CLI's wire contract).
//
// CSV: header "n,re,im", one row per centered index in ascending order. The
// index column must be exactly the contiguous centered range for the file's
// length; anything else is rejected. An optional comment line "# delta=<v>"
// before the header carries the sampling period.
//
// JSON: {"delta": <float>, "re": [...], "im": [...]} with implied centered
// indexing. delta may be omitted in both formats, defaulting to sqrt(1/N).
//
// Numbers are written with the shortest decimal representation that parses
// back to the same double, so write/read round-trips are lossless.

void write_signal_csv(const Signal& x, std::ostream& out);
Signal read_signal_csv(std::istream& in);

void write_signal_json(const Signal& x, std::ostream& out);
Signal read_signal_json(std::istream& in);

// Dispatch on filename extension: ".json" selects JSON, anything else CSV.
void save_signal(const Signal& x, const std::string& path);
Signal load_signal(const std::string& path);

}  // namespace lct
