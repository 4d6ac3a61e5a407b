#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "htp/codec.hpp"

namespace htp {

/// Binary embedding format: 8-byte magic "HTPVEC01", then the dimension
/// as a little-endian uint32, then dim little-endian IEEE 754 doubles.
inline constexpr char kVectorMagic[8] = {'H', 'T', 'P', 'V', 'E', 'C', '0', '1'};

void write_embedding(std::ostream& out, const HarmonicEmbedding& embedding);
HarmonicEmbedding read_embedding(std::istream& in);

void write_embedding_file(const std::string& path, const HarmonicEmbedding& embedding);
HarmonicEmbedding read_embedding_file(const std::string& path);

std::string embedding_to_json(const HarmonicEmbedding& embedding);
HarmonicEmbedding embedding_from_json(const std::string& text);

}  // namespace htp
