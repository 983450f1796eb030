#pragma once

#include <istream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

#include "wang/patch.hpp"
#include "wang/tileset.hpp"

namespace wang {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// WTS v1 tilesets.
Tileset read_wts(std::istream& in);
void write_wts(std::ostream& out, const Tileset& ts);

// WSR v1 superposition relations, tiles referenced by name.
SuperpositionRelation read_wsr(std::istream& in, const Tileset& a, const Tileset& b);
void write_wsr(std::ostream& out, const SuperpositionRelation& rel, const Tileset& a, const Tileset& b);

// WTP v1 patches, tiles referenced by name.
Patch read_wtp(std::istream& in, std::shared_ptr<const Tileset> ts);
void write_wtp(std::ostream& out, const Patch& patch);

Tileset load_wts(const std::string& path);
Patch load_wtp(const std::string& path, std::shared_ptr<const Tileset> ts);

}  // namespace wang
