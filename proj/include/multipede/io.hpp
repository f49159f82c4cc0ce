#pragma once

#include <iosfwd>
#include <string>

#include "multipede/hypergraph.hpp"
#include "multipede/multipede.hpp"

namespace multipede {

/// ".hg" text format: `hg 1`, `n <count>`, then `e <a> <b> <c>` per edge
/// with a<b<c in lexicographic edge order. Strict: duplicates, unsorted
/// triples, out-of-range vertices and out-of-order lines are rejected.
std::string serialize_hg(const Hypergraph& h);
Hypergraph parse_hg(std::istream& in);
Hypergraph load_hg(const std::string& path);
void save_hg(const Hypergraph& h, const std::string& path);

/// ".mpd" text format: `mpd 1`, `level <1|2|3|4>`, `segments <n>`, then
/// `e <a> <b> <c> p <0|1>` in lexicographic edge order. Feet, order and
/// super-segments are implicit and reconstructed per level.
std::string serialize_mpd(const Multipede& m);
Multipede parse_mpd(std::istream& in);
Multipede load_mpd(const std::string& path);
void save_mpd(const Multipede& m, const std::string& path);

}  // namespace multipede
