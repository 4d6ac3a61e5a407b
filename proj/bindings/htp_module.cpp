#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "htp/codec.hpp"
#include "htp/correlation.hpp"
#include "htp/errors.hpp"
#include "htp/eval.hpp"
#include "htp/lexicon.hpp"
#include "htp/modular.hpp"
#include "htp/pooling.hpp"
#include "htp/vector_io.hpp"

namespace py = pybind11;

namespace {

using namespace htp;

Splitter splitter_from_name(const std::string& name) {
    if (name == "unicode") return Splitter::UnicodeWords;
    if (name == "whitespace") return Splitter::Whitespace;
    if (name == "pretokenized") return Splitter::Pretokenized;
    throw std::invalid_argument("unknown splitter: " + name);
}

py::object big_to_pyint(const BigUint& value) {
    return py::module_::import("builtins").attr("int")(value.to_decimal());
}

BigUint pyint_to_big(const py::object& value) {
    return BigUint::from_decimal(py::cast<std::string>(py::str(value)));
}

/// Token-level codec with a fixed configuration.
struct PyCodec {
    CodecConfig config;

    PyCodec(std::size_t dim, int l_max, std::uint64_t min_modulus, bool nfc)
        : config(default_codec_config(dim, l_max, min_modulus,
                                      nfc ? Normalization::NFC : Normalization::None)) {}

    std::vector<double> encode_token(const std::string& token) const {
        return encode(token, config).components;
    }
    py::tuple decode_vector(const std::vector<double>& components) const {
        HarmonicEmbedding embedding{components};
        DecodeResult result = decode(embedding, config);
        return py::make_tuple(result.token, result.capacity_limited);
    }
    py::object token_to_int(const std::string& token) const {
        return big_to_pyint(token_to_integer(token, config).value);
    }
    std::string int_to_token(const py::object& value) const {
        return integer_to_token(pyint_to_big(value), config);
    }
};

/// Sentence embedder: owns the weighting scheme and, for the
/// frequency-backed kinds, the table built from a caller-supplied corpus.
struct PySentenceEncoder {
    CodecConfig codec;
    TokenizerConfig tokenizer;
    WeightingScheme scheme;

    PySentenceEncoder(const std::string& scheme_name, std::size_t dim, int l_max,
                      std::uint64_t min_modulus, bool nfc, bool lowercase,
                      const std::string& splitter, bool chunk_overlong,
                      const std::vector<std::string>& corpus,
                      const std::vector<std::string>& stopwords)
        : codec(default_codec_config(dim, l_max, min_modulus,
                                     nfc ? Normalization::NFC : Normalization::None)) {
        tokenizer.lowercase = lowercase;
        tokenizer.splitter = splitter_from_name(splitter);
        tokenizer.chunk_overlong = chunk_overlong;
        SchemeKind kind = scheme_kind_from_name(scheme_name);
        std::shared_ptr<const StopwordSet> words;
        if (!stopwords.empty())
            words = std::make_shared<StopwordSet>(stopwords.begin(), stopwords.end());
        scheme = WeightingScheme::deferred(kind, std::move(words));
        if (scheme.needs_table()) {
            if (corpus.empty())
                throw std::invalid_argument(scheme_name + " weighting needs a corpus");
            std::vector<std::vector<std::string>> docs;
            docs.reserve(corpus.size());
            for (const auto& sentence : corpus) docs.push_back(tokenize(sentence, tokenizer));
            scheme = scheme.with_table(
                std::make_shared<FrequencyTable>(build_frequency_table(docs)));
        }
    }

    std::vector<double> embed(const std::string& sentence) const {
        return embed_sentence(sentence, scheme, codec, tokenizer).components;
    }
    double similarity(const std::string& a, const std::string& b) const {
        return cosine_similarity(embed_sentence(a, scheme, codec, tokenizer),
                                 embed_sentence(b, scheme, codec, tokenizer));
    }
};

py::dict report_to_dict(const EvalReport& report) {
    py::dict d;
    d["config_fingerprint"] = report.config_fingerprint;
    d["scheme"] = report.scheme_name;
    d["D"] = report.dim;
    d["rho"] = report.spearman_rho;
    d["r"] = report.pearson_r;
    d["n_pairs"] = report.n_pairs;
    d["latency_ms"] = report.mean_latency_ms_per_pair;
    d["flagged_pairs"] = report.flagged_pairs;
    d["predictions"] = report.predictions;
    return d;
}

EvalReport eval_records(const std::vector<std::tuple<std::string, std::string, double>>& pairs,
                        const std::string& scheme_name, std::size_t dim, int l_max,
                        std::uint64_t min_modulus, bool nfc, bool lowercase, int threads) {
    std::vector<StsRecord> records;
    records.reserve(pairs.size());
    for (const auto& [a, b, score] : pairs) records.push_back({a, b, score});
    CodecConfig codec = default_codec_config(
        dim, l_max, min_modulus, nfc ? Normalization::NFC : Normalization::None);
    TokenizerConfig tokenizer;
    tokenizer.lowercase = lowercase;
    WeightingScheme scheme = WeightingScheme::deferred(scheme_kind_from_name(scheme_name));
    EvalOptions options;
    options.threads = threads;
    return run_eval(records, scheme, codec, tokenizer, options);
}

}  // namespace

PYBIND11_MODULE(_htp, m) {
    m.doc() = "Deterministic, reversible text embeddings from modular harmonic projection";

    py::register_exception<htp::Error>(m, "HtpError");

    py::class_<htp::ModulusBasis>(m, "Basis")
        .def_static(
            "generate",
            [](std::size_t k, std::uint64_t min_modulus) {
                return htp::generate_basis(k, min_modulus);
            },
            py::arg("k"), py::arg("min_modulus") = 3,
            "First k primes >= min_modulus, with reconstruction constants.")
        .def_property_readonly("moduli", &htp::ModulusBasis::moduli)
        .def_property_readonly("capacity",
                               [](const htp::ModulusBasis& b) { return big_to_pyint(b.capacity()); })
        .def("to_json", &htp::ModulusBasis::to_json)
        .def_static("from_json", &htp::ModulusBasis::from_json, py::arg("text"))
        .def("__len__", &htp::ModulusBasis::size)
        .def("__repr__", [](const htp::ModulusBasis& b) {
            return "<htp.Basis k=" + std::to_string(b.size()) + " max_modulus=" +
                   std::to_string(b.largest_modulus()) + ">";
        });

    py::class_<PyCodec>(m, "Codec")
        .def(py::init<std::size_t, int, std::uint64_t, bool>(), py::arg("dim") = 512,
             py::arg("l_max") = 24, py::arg("min_modulus") = 3, py::arg("nfc") = true)
        .def("encode", &PyCodec::encode_token, py::arg("token"),
             "Token -> interleaved (sin, cos) vector of length dim.")
        .def("decode", &PyCodec::decode_vector, py::arg("vector"),
             "Vector -> (token, capacity_limited).")
        .def("token_to_integer", &PyCodec::token_to_int, py::arg("token"))
        .def("integer_to_token", &PyCodec::int_to_token, py::arg("value"))
        .def_property_readonly("dim",
                               [](const PyCodec& c) { return 2 * c.config.basis.size(); })
        .def_property_readonly("basis", [](const PyCodec& c) { return c.config.basis; })
        .def_property_readonly("reversible",
                               [](const PyCodec& c) { return c.config.capacity_covers_tokens(); });

    py::class_<PySentenceEncoder>(m, "SentenceEncoder")
        .def(py::init<const std::string&, std::size_t, int, std::uint64_t, bool, bool,
                      const std::string&, bool, const std::vector<std::string>&,
                      const std::vector<std::string>&>(),
             py::arg("scheme") = "uniform", py::arg("dim") = 512, py::arg("l_max") = 24,
             py::arg("min_modulus") = 3, py::arg("nfc") = true, py::arg("lowercase") = true,
             py::arg("splitter") = "unicode", py::arg("chunk_overlong") = false,
             py::arg("corpus") = std::vector<std::string>{},
             py::arg("stopwords") = std::vector<std::string>{})
        .def("embed", &PySentenceEncoder::embed, py::arg("sentence"))
        .def("similarity", &PySentenceEncoder::similarity, py::arg("a"), py::arg("b"));

    m.def("cosine_similarity",
          [](const std::vector<double>& a, const std::vector<double>& b) {
              return htp::cosine_similarity(htp::SentenceVector{a, false},
                                            htp::SentenceVector{b, false});
          },
          py::arg("a"), py::arg("b"));

    m.def("spearman",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return htp::spearman(x, y);
          },
          py::arg("x"), py::arg("y"), "Rank correlation with fractional (average) ties.");

    m.def("pearson",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return htp::pearson(x, y);
          },
          py::arg("x"), py::arg("y"));

    m.def("evaluate",
          [](const std::vector<std::tuple<std::string, std::string, double>>& pairs,
             const std::string& scheme, std::size_t dim, int l_max, std::uint64_t min_modulus,
             bool nfc, bool lowercase, int threads) {
              return report_to_dict(eval_records(pairs, scheme, dim, l_max, min_modulus, nfc,
                                                 lowercase, threads));
          },
          py::arg("pairs"), py::arg("scheme") = "tfidf", py::arg("dim") = 512,
          py::arg("l_max") = 24, py::arg("min_modulus") = 3, py::arg("nfc") = true,
          py::arg("lowercase") = true, py::arg("threads") = 1,
          "Scores (sentence_a, sentence_b, gold) triples and reports correlations.");

    m.def("evaluate_tsv",
          [](const std::string& path, bool simple, const std::string& scheme, std::size_t dim,
             int threads) {
              htp::LoadedDataset data = htp::load_sts_tsv(
                  path, simple ? htp::ColumnMap::simple() : htp::ColumnMap::semeval());
              htp::CodecConfig codec = htp::default_codec_config(dim);
              htp::TokenizerConfig tokenizer;
              htp::WeightingScheme ws =
                  htp::WeightingScheme::deferred(htp::scheme_kind_from_name(scheme));
              htp::EvalOptions options;
              options.threads = threads;
              py::dict d = report_to_dict(
                  htp::run_eval(data.records, ws, codec, tokenizer, options));
              d["skipped_rows"] = data.skipped_rows;
              return d;
          },
          py::arg("path"), py::arg("simple") = true, py::arg("scheme") = "tfidf",
          py::arg("dim") = 512, py::arg("threads") = 1,
          "Runs the benchmark on a TSV file of sentence pairs.");

    m.attr("__version__") = "0.1.0";
}
