#include "htp/vector_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "htp/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "vector i/o assumes a little-endian host");

namespace htp {

void write_embedding(std::ostream& out, const HarmonicEmbedding& embedding) {
    out.write(kVectorMagic, sizeof kVectorMagic);
    std::uint32_t dim = static_cast<std::uint32_t>(embedding.dim());
    out.write(reinterpret_cast<const char*>(&dim), sizeof dim);
    out.write(reinterpret_cast<const char*>(embedding.components.data()),
              static_cast<std::streamsize>(dim * sizeof(double)));
    if (!out) throw std::runtime_error("failed to write embedding");
}

HarmonicEmbedding read_embedding(std::istream& in) {
    char magic[sizeof kVectorMagic];
    if (!in.read(magic, sizeof magic) || std::memcmp(magic, kVectorMagic, sizeof magic) != 0)
        throw std::runtime_error("not an embedding file (bad magic)");
    std::uint32_t dim = 0;
    if (!in.read(reinterpret_cast<char*>(&dim), sizeof dim))
        throw std::runtime_error("truncated embedding header");
    HarmonicEmbedding embedding;
    embedding.components.resize(dim);
    if (!in.read(reinterpret_cast<char*>(embedding.components.data()),
                 static_cast<std::streamsize>(dim * sizeof(double))))
        throw std::runtime_error("truncated embedding payload");
    return embedding;
}

void write_embedding_file(const std::string& path, const HarmonicEmbedding& embedding) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::FileNotFound, path);
    write_embedding(out, embedding);
}

HarmonicEmbedding read_embedding_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::FileNotFound, path);
    return read_embedding(in);
}

std::string embedding_to_json(const HarmonicEmbedding& embedding) {
    return nlohmann::json(embedding.components).dump();
}

HarmonicEmbedding embedding_from_json(const std::string& text) {
    HarmonicEmbedding embedding;
    embedding.components = nlohmann::json::parse(text).get<std::vector<double>>();
    return embedding;
}

}  // namespace htp
