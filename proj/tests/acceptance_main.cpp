// Acceptance suite: end-to-end checks of the library's headline
// guarantees, one section per criterion, each printing a PASS/FAIL line.
// Run via ctest (test name "acceptance") or directly.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <sys/resource.h>

#include "htp/bigint.hpp"
#include "htp/codec.hpp"
#include "htp/correlation.hpp"
#include "htp/errors.hpp"
#include "htp/eval.hpp"
#include "htp/pooling.hpp"
#include "htp/unicode.hpp"

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %s :: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// mixed-script token generator over NFC-inert ranges (lengths 1..24
// UTF-16 units, astral planes included, never U+0000)
std::string random_token(std::mt19937_64& rng) {
    static const std::pair<char32_t, char32_t> ranges[] = {
        {U'a', U'z'},     {U'A', U'Z'},     {U'0', U'9'},     {0x0430, 0x044F},
        {0x03B1, 0x03C9}, {0x4E00, 0x4FFF}, {0x3041, 0x3096}, {0xAC00, 0xD7A3},
        {0x05D0, 0x05EA}, {0x0621, 0x063A}, {0x1F300, 0x1F5FF},
    };
    int budget = 1 + static_cast<int>(rng() % 24);
    std::vector<char32_t> cps;
    int used = 0;
    while (used < budget) {
        const auto& range = ranges[rng() % std::size(ranges)];
        char32_t cp =
            range.first + static_cast<char32_t>(rng() % (range.second - range.first + 1));
        int width = cp >= 0x10000 ? 2 : 1;
        if (used + width > budget) {
            if (used == 0) continue;
            break;
        }
        cps.push_back(cp);
        used += width;
    }
    return htp::unicode::codepoints_to_utf8(cps);
}

long resident_kb() {
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return usage.ru_maxrss;
}

const char* dataset_path() {
    if (const char* env = std::getenv("HTP_STSB_TSV")) return env;
    return HTP_SOURCE_DIR "/data/stsb/stsb-en-test.tsv";
}

// --- criteria ---------------------------------------------------------

void criterion_reversibility() {
    auto config = htp::default_codec_config(512);
    std::mt19937_64 rng(0xACCE97);
    int failures = 0;
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 10000; ++i) {
        std::string token = random_token(rng);
        if (htp::decode(htp::encode(token, config), config).token != token) ++failures;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report("reversibility: 10^4 random mixed-script tokens, D=512",
           failures == 0 && seconds < 10.0,
           fmt("%d failures, %.2f s (budget 10 s)", failures, seconds));
}

void criterion_noise_tolerance() {
    auto config = htp::default_codec_config(512);
    std::mt19937_64 rng(0xBEEF);
    std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        std::string token = random_token(rng);
        auto embedding = htp::encode(token, config);
        for (double& c : embedding.components) c += noise(rng);
        try {
            if (htp::decode(embedding, config).token != token) ++failures;
        } catch (const htp::Error&) {
            ++failures;
        }
    }

    // sweep: exactness is guaranteed while the worst-case phase shift
    // asin(d/(1-d)) with d = amplitude*sqrt(2) stays under pi/m_max
    std::uint64_t m_max = config.basis.largest_modulus();
    double s = std::sin(std::numbers::pi / static_cast<double>(m_max));
    double threshold = s / ((1.0 + s) * std::numbers::sqrt2);
    bool sweep_ok = true;
    int first_failure_seen = -1;
    const double amplitudes[] = {0.3e-3, 0.6e-3, 0.9e-3, 1.2e-3, 1.3e-3,
                                 2.0e-3, 3.0e-3, 5.0e-3};
    for (std::size_t level = 0; level < std::size(amplitudes); ++level) {
        double amplitude = amplitudes[level];
        std::uniform_real_distribution<double> d(-amplitude, amplitude);
        int level_failures = 0;
        for (int i = 0; i < 400; ++i) {
            std::string token = random_token(rng);
            auto embedding = htp::encode(token, config);
            for (double& c : embedding.components) c += d(rng);
            try {
                if (htp::decode(embedding, config).token != token) ++level_failures;
            } catch (const htp::Error&) {
                ++level_failures;
            }
        }
        if (amplitude <= threshold && level_failures > 0) sweep_ok = false;
        if (level_failures > 0 && first_failure_seen < 0)
            first_failure_seen = static_cast<int>(level);
    }
    // past the analytic threshold failures must eventually appear
    if (first_failure_seen < 0) sweep_ok = false;

    report("noise tolerance: +-1e-3 noise, 10^4 tokens; failures only past threshold",
           failures == 0 && sweep_ok,
           fmt("%d failures at 1e-3; analytic amplitude threshold %.3e (m_max=%llu); first "
               "sweep failures at amplitude %.1e",
               failures, threshold, static_cast<unsigned long long>(m_max),
               first_failure_seen >= 0 ? amplitudes[first_failure_seen] : 0.0));
}

void criterion_crt_oracle() {
    std::mt19937_64 rng(0xC47);
    int cases = 0;
    bool ok = true;
    // capacities 105, 1155, 15015, 255255 — all below 10^6
    for (std::size_t k = 3; k <= 6; ++k) {
        auto basis = htp::generate_basis(k, 3);
        std::uint64_t capacity = basis.capacity().low_u64();
        for (int trial = 0; trial < 260; ++trial) {
            std::vector<std::uint64_t> rs;
            for (std::uint64_t m : basis.moduli()) rs.push_back(rng() % m);
            htp::BigUint got = htp::crt_reconstruct(rs, basis);
            // brute-force oracle
            std::uint64_t expected = capacity;
            for (std::uint64_t n = 0; n < capacity; ++n) {
                bool match = true;
                for (std::size_t i = 0; i < rs.size(); ++i) {
                    if (n % basis.moduli()[i] != rs[i]) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    expected = n;
                    break;
                }
            }
            if (got != htp::BigUint(expected)) ok = false;
            ++cases;
        }
    }
    report("CRT reconstruction matches exhaustive search", ok && cases >= 1000,
           fmt("%d residue tuples across capacities 105..255255", cases));
}

void criterion_correlation_oracle() {
    std::mt19937_64 rng(0x5EA);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double worst = 0.0;
    int cases = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 3 + rng() % 50;
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = dist(rng);
            y[i] = dist(rng);
        }
        if (trial % 2 == 0) {
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = std::round(x[i] * 3.0) / 3.0;
                y[i] = std::round(y[i] * 3.0) / 3.0;
            }
        }
        // naive reference: O(n^2) counting ranks + raw-moment formula
        auto ranks = [](const std::vector<double>& v) {
            std::vector<double> out(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                std::size_t less = 0, equal = 0;
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (v[j] < v[i]) ++less;
                    if (v[j] == v[i]) ++equal;
                }
                out[i] = static_cast<double>(less) + 1.0 +
                         (static_cast<double>(equal) - 1.0) / 2.0;
            }
            return out;
        };
        auto naive_pearson = [](const std::vector<double>& a, const std::vector<double>& b) {
            double n2 = static_cast<double>(a.size());
            double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                sa += a[i];
                sb += b[i];
                sab += a[i] * b[i];
                saa += a[i] * a[i];
                sbb += b[i] * b[i];
            }
            double denom = std::sqrt((n2 * saa - sa * sa) * (n2 * sbb - sb * sb));
            return denom == 0.0 ? std::nan("") : (n2 * sab - sa * sb) / denom;
        };
        double ref_r = naive_pearson(x, y);
        double ref_rho = naive_pearson(ranks(x), ranks(y));
        if (std::isnan(ref_r) || std::isnan(ref_rho)) continue;
        worst = std::max(worst, std::abs(htp::pearson(x, y) - ref_r));
        worst = std::max(worst, std::abs(htp::spearman(x, y) - ref_rho));
        ++cases;
    }
    report("spearman/pearson match naive references within 1e-12", worst <= 1e-12 && cases > 900,
           fmt("%d cases (ties included), worst |delta| = %.2e", cases, worst));
}

htp::LoadedDataset load_benchmark(bool& available) {
    try {
        auto data = htp::load_sts_tsv(dataset_path(), htp::ColumnMap::simple());
        available = true;
        return data;
    } catch (const htp::Error&) {
        available = false;
        return {};
    }
}

void criterion_sts_reproduction(const htp::LoadedDataset& data, bool available) {
    if (!available) {
        report("benchmark reproduction: rho within +-0.05 of 0.6781 (tfidf) and 0.6940 (stopword)",
               false, std::string("dataset not found at ") + dataset_path());
        return;
    }
    auto codec = htp::default_codec_config(512);
    htp::TokenizerConfig tokenizer;

    auto tfidf = htp::run_eval(data.records,
                               htp::WeightingScheme::deferred(htp::SchemeKind::TfIdf), codec,
                               tokenizer);
    auto stop = htp::run_eval(data.records,
                              htp::WeightingScheme::deferred(htp::SchemeKind::StopwordRemoval),
                              codec, tokenizer);
    bool pairs_ok = data.records.size() == 1379;
    bool tfidf_ok = std::abs(tfidf.spearman_rho - 0.6781) <= 0.05;
    bool stop_ok = std::abs(stop.spearman_rho - 0.6940) <= 0.05;
    report("benchmark reproduction: rho within +-0.05 of 0.6781 (tfidf) and 0.6940 (stopword)",
           pairs_ok && tfidf_ok && stop_ok,
           fmt("n=%zu; tfidf rho=%.4f r=%.4f; stopword rho=%.4f r=%.4f", data.records.size(),
               tfidf.spearman_rho, tfidf.pearson_r, stop.spearman_rho, stop.pearson_r));
}

void criterion_dimension_trend(const htp::LoadedDataset& data, bool available) {
    if (!available) {
        report("dimensionality trend: rho nondecreasing over D in {32,128,512}", false,
               std::string("dataset not found at ") + dataset_path());
        return;
    }
    auto codec = htp::default_codec_config(32);
    htp::TokenizerConfig tokenizer;
    std::vector<std::size_t> dims = {32, 128, 512};
    auto reports = htp::dimension_sweep(data.records,
                                        htp::WeightingScheme::deferred(htp::SchemeKind::TfIdf),
                                        codec, dims, tokenizer);
    double rho32 = reports[0].spearman_rho;
    double rho128 = reports[1].spearman_rho;
    double rho512 = reports[2].spearman_rho;
    bool ok = rho32 >= 0.55 && rho32 <= rho128 && rho128 <= rho512 &&
              (rho512 - rho32) >= 0.02;
    report("dimensionality trend: rho nondecreasing over D in {32,128,512}", ok,
           fmt("rho(32)=%.4f rho(128)=%.4f rho(512)=%.4f, floor 0.55, spread >= 0.02", rho32,
               rho128, rho512));
}

void criterion_latency_and_memory(const htp::LoadedDataset& data, bool available) {
    long before_kb = resident_kb();
    auto codec = htp::default_codec_config(512);
    htp::TokenizerConfig tokenizer;

    std::vector<htp::StsRecord> records;
    if (available) {
        records = data.records;
    } else {
        // representative sentence pairs when the benchmark file is absent
        for (int i = 0; i < 1000; ++i) {
            records.push_back({"a man is playing a guitar on the stage",
                               "someone plays an instrument for the crowd", 3.0 + (i % 3)});
        }
    }
    auto report_eval = htp::run_eval(
        records, htp::WeightingScheme::deferred(htp::SchemeKind::TfIdf), codec, tokenizer);
    long after_kb = resident_kb();
    double delta_mb = static_cast<double>(after_kb - before_kb) / 1024.0;
    bool latency_ok = report_eval.mean_latency_ms_per_pair <= 5.0;
    bool memory_ok = delta_mb < 50.0;
    report("latency <= 5 ms/pair at D=512, codec state < 50 MB resident", latency_ok && memory_ok,
           fmt("%.3f ms/pair over %zu pairs; RSS delta %.1f MB (no model files, basis only)",
               report_eval.mean_latency_ms_per_pair, records.size(), delta_mb));
}

void criterion_pooling_invariants() {
    std::mt19937_64 rng(0x0071);
    std::uniform_real_distribution<double> angle(0.0, 6.28318);
    std::uniform_real_distribution<double> wdist(0.01, 4.0);
    double worst = 0.0;
    int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        std::size_t n = 1 + rng() % 6, k = 4 + rng() % 8;
        std::vector<htp::HarmonicEmbedding> embeddings(n);
        std::vector<double> weights(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                double a = angle(rng);
                embeddings[i].components.push_back(std::sin(a));
                embeddings[i].components.push_back(std::cos(a));
            }
            weights[i] = wdist(rng);
        }
        auto base = htp::pool(embeddings, weights);

        // scale invariance
        double c = std::uniform_real_distribution<double>(1e-4, 1e4)(rng);
        std::vector<double> scaled = weights;
        for (double& w : scaled) w *= c;
        auto rescaled = htp::pool(embeddings, scaled);
        for (std::size_t d = 0; d < base.dim(); ++d)
            worst = std::max(worst, std::abs(base.components[d] - rescaled.components[d]));

        // permutation invariance
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<htp::HarmonicEmbedding> pe;
        std::vector<double> pw;
        for (std::size_t i : perm) {
            pe.push_back(embeddings[i]);
            pw.push_back(weights[i]);
        }
        auto permuted = htp::pool(pe, pw);
        for (std::size_t d = 0; d < base.dim(); ++d)
            worst = std::max(worst, std::abs(base.components[d] - permuted.components[d]));

        // duplication invariance: repeating the whole bag leaves the mean alone
        std::vector<htp::HarmonicEmbedding> doubled(embeddings);
        doubled.insert(doubled.end(), embeddings.begin(), embeddings.end());
        std::vector<double> dw(weights);
        dw.insert(dw.end(), weights.begin(), weights.end());
        auto dup = htp::pool(doubled, dw);
        for (std::size_t d = 0; d < base.dim(); ++d)
            worst = std::max(worst, std::abs(base.components[d] - dup.components[d]));
    }
    report("pooling invariants: scale, permutation, duplication at 1e-12", worst <= 1e-12,
           fmt("%d randomized trials each, worst |delta| = %.2e", trials, worst));
}

void criterion_determinism(const htp::LoadedDataset& data, bool available) {
    std::vector<htp::StsRecord> records;
    if (available) {
        records.assign(data.records.begin(),
                       data.records.begin() + std::min<std::size_t>(data.records.size(), 300));
    } else {
        records = {{"a b c", "a b d", 3.0}, {"e f", "g h", 1.0}, {"i j k", "i j k", 5.0},
                   {"the cat sat", "a cat sat down", 4.0}};
    }
    auto codec = htp::default_codec_config(512);
    htp::TokenizerConfig tokenizer;
    auto scheme = htp::WeightingScheme::deferred(htp::SchemeKind::TfIdf);
    htp::EvalOptions one;
    one.threads = 1;
    htp::EvalOptions four;
    four.threads = 4;

    auto r1 = htp::run_eval(records, scheme, codec, tokenizer, one);
    auto r2 = htp::run_eval(records, scheme, codec, tokenizer, one);
    auto r4 = htp::run_eval(records, scheme, codec, tokenizer, four);
    bool ok = r1.spearman_rho == r2.spearman_rho && r1.pearson_r == r2.pearson_r &&
              r1.predictions == r2.predictions && r1.spearman_rho == r4.spearman_rho &&
              r1.pearson_r == r4.pearson_r && r1.predictions == r4.predictions;
    report("determinism: bit-identical rho, r, and per-pair scores across runs and threads", ok,
           fmt("rho=%.17g over %zu pairs, threads 1 vs 4", r1.spearman_rho, records.size()));
}

}  // namespace

int main() {
    std::printf("htp acceptance suite\n");

    criterion_reversibility();
    criterion_noise_tolerance();
    criterion_crt_oracle();
    criterion_correlation_oracle();

    bool dataset_available = false;
    htp::LoadedDataset data = load_benchmark(dataset_available);
    criterion_sts_reproduction(data, dataset_available);
    criterion_dimension_trend(data, dataset_available);
    criterion_latency_and_memory(data, dataset_available);

    criterion_pooling_invariants();
    criterion_determinism(data, dataset_available);

    std::printf("%s (%d failing criteria)\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
