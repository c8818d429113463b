#include "qk/harness.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>

#include "qk/error.hpp"
#include "qk/generators.hpp"
#include "qk/io.hpp"
#include "qk/solvers.hpp"

namespace qk {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::small: return "small";
        case Variant::sources: return "sources";
        case Variant::large: return "large";
        case Variant::sharp: return "sharp";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    if (name == "small") return Variant::small;
    if (name == "sources") return Variant::sources;
    if (name == "large") return Variant::large;
    if (name == "sharp") return Variant::sharp;
    throw InvalidInput("unknown conjecture '" + std::string(name) + "' (small|sources|large|sharp)");
}

ConjectureSpec::ConjectureSpec(Variant variant_, RationalAlpha alpha_, bool sink_free_version_)
    : variant(variant_), alpha(alpha_), sink_free_version(sink_free_version_) {
    if (variant == Variant::small && !sink_free_version) {
        throw InvalidInput("the small quasi-kernel statement is only stated for sink-free digraphs");
    }
}

Rational Record::slack(Variant variant) const {
    if (n == 0) return Rational(0);
    switch (variant) {
        case Variant::small:
        case Variant::sources: return (bound - Rational(objective)) / Rational(n);
        case Variant::large: return (Rational(objective) - bound) / Rational(n);
        case Variant::sharp: return (Rational(objective) - bound) / Rational(2 * n);
    }
    return Rational(0);
}

Record check(const Digraph& d, const ConjectureSpec& spec, std::uint64_t index) {
    const std::int64_t p = spec.alpha.p();
    const std::int64_t q = spec.alpha.q();
    const std::int64_t n = d.order();
    if (spec.sink_free_version && !is_sink_free(d)) {
        throw InvalidInput("check: the " + to_string(spec.variant) +
                           " statement was requested for sink-free digraphs only, but this one has sinks");
    }
    Record r;
    r.index = index;
    r.n = d.order();
    r.adjacency = adjacency_hex(d);
    SolveResult best;
    switch (spec.variant) {
        case Variant::small:
            best = min_quasi_kernel(d);
            r.bound = Rational((q - p) * n, q);
            r.pass = q * best.objective <= (q - p) * n;
            break;
        case Variant::sources: {
            const std::int64_t s = sources_not_sinks(d).size();
            best = min_quasi_kernel(d);
            r.bound = Rational(q * n - p * s, q);
            r.pass = q * best.objective <= q * n - p * s;
            break;
        }
        case Variant::large:
            best = max_large_quasi_kernel(d);
            r.bound = Rational(p * n, q);
            r.pass = q * best.objective >= p * n;
            break;
        case Variant::sharp:
            best = max_sharp_quasi_kernel(d);
            r.bound = Rational(2 * p * n, q);
            r.pass = q * best.objective >= 2 * p * n;
            break;
    }
    if (!best.verified) throw PostconditionViolation("check: solver witness failed verification");
    r.objective = best.objective;
    r.witness = *best.witness;
    return r;
}

Corpus Corpus::enumeration(DigraphEnumeration e) {
    Corpus c;
    c.description_ = e.describe();
    c.enumeration_ = std::move(e);
    return c;
}

Corpus Corpus::list(std::string description, std::vector<Digraph> graphs) {
    Corpus c;
    c.description_ = std::move(description);
    c.graphs_ = std::move(graphs);
    return c;
}

std::uint64_t Corpus::size() const { return enumeration_ ? enumeration_->size() : graphs_.size(); }

std::optional<Digraph> Corpus::at(std::uint64_t i) const {
    if (!enumeration_) return graphs_.at(i);
    Digraph d = enumeration_->at(i);
    if (!enumeration_->accepts(d)) return std::nullopt;
    return d;
}

Corpus random_corpus(int count, int min_n, int max_n, Rational p, std::uint64_t seed, bool sink_free) {
    if (min_n < 1 || max_n < min_n) throw InvalidInput("random corpus needs 1 <= min_n <= max_n");
    std::vector<Digraph> graphs;
    for (int i = 0; i < count; ++i) {
        const int n = min_n + static_cast<int>(random_draw(seed, i) % (max_n - min_n + 1));
        for (std::uint64_t attempt = 0;; ++attempt) {
            Digraph d = make(FamilySpec::random(n, p, derive_seed(seed, i, attempt)));
            if (!sink_free || is_sink_free(d)) {
                graphs.push_back(d);
                break;
            }
            if (attempt > 100000) throw InvalidInput("random corpus: cannot draw a sink-free digraph");
        }
    }
    std::ostringstream desc;
    desc << "random count=" << count << " n=" << min_n << ".." << max_n << " p=" << p.to_string()
         << " seed=" << seed << (sink_free ? " sink_free" : "");
    return Corpus::list(desc.str(), std::move(graphs));
}

void Report::add(Record r) {
    ++count;
    const Rational s = r.slack(variant);
    if (!r.pass) failures.push_back(r.index);
    bool extremal_now = false;
    if (!min_slack || s < *min_slack) {
        min_slack = s;
        if (!keep_all_records) {
            // Previous extremal records are only kept if they also fail.
            std::erase_if(records, [&](const Record& old) { return old.pass; });
        }
        extremal = {r.index};
        extremal_now = true;
    } else if (s == *min_slack) {
        extremal.push_back(r.index);
        extremal_now = true;
    }
    if (keep_all_records || !r.pass || extremal_now) records.push_back(std::move(r));
}

namespace {

nlohmann::json record_to_json(const Record& r) {
    return {{"index", r.index},
            {"n", r.n},
            {"adjacency", r.adjacency},
            {"objective", r.objective},
            {"bound", {{"num", r.bound.num()}, {"den", r.bound.den()}}},
            {"pass", r.pass},
            {"witness", vertex_set_to_json(r.witness)}};
}

template <class T>
std::vector<T> sorted_union(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

nlohmann::json Report::to_json() const {
    nlohmann::json recs = nlohmann::json::array();
    for (const Record& r : records) recs.push_back(record_to_json(r));
    nlohmann::json slack = nullptr;
    if (min_slack) slack = {{"num", min_slack->num()}, {"den", min_slack->den()}};
    return {{"schema", kReportSchema},
            {"harness_version", harness_version},
            {"corpus", corpus},
            {"conjecture",
             {{"variant", to_string(variant)}, {"alpha", alpha}, {"sink_free_version", sink_free_version}}},
            {"shard", {{"count", shard_count}, {"indices", shards}}},
            {"records_kept", keep_all_records ? "all" : "failures_and_extremal"},
            {"records", recs},
            {"aggregates",
             {{"count", count}, {"failures", failures}, {"min_slack", slack}, {"extremal", extremal}}}};
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "adjacency_hex,n,objective,bound_num,bound_den,pass\n";
    for (const Record& r : records) {
        out << r.adjacency << ',' << r.n << ',' << r.objective << ',' << r.bound.num() << ',' << r.bound.den()
            << ',' << (r.pass ? 1 : 0) << '\n';
    }
    return out.str();
}

Report merge(const Report& a, const Report& b) {
    Report m = a;
    m.shards = sorted_union(a.shards, b.shards);
    m.keep_all_records = a.keep_all_records && b.keep_all_records;
    m.count = a.count + b.count;
    m.failures = sorted_union(a.failures, b.failures);
    if (!a.min_slack || (b.min_slack && *b.min_slack < *a.min_slack)) {
        m.min_slack = b.min_slack;
        m.extremal = b.extremal;
    } else if (b.min_slack && *b.min_slack == *a.min_slack) {
        m.extremal = sorted_union(a.extremal, b.extremal);
    }
    std::sort(m.extremal.begin(), m.extremal.end());
    m.records.clear();
    std::merge(a.records.begin(), a.records.end(), b.records.begin(), b.records.end(),
               std::back_inserter(m.records),
               [](const Record& x, const Record& y) { return x.index < y.index; });
    if (!m.keep_all_records) {
        std::erase_if(m.records, [&](const Record& r) {
            return r.pass && !std::binary_search(m.extremal.begin(), m.extremal.end(), r.index);
        });
    }
    return m;
}

namespace {

Report empty_report(const Corpus& corpus, const ConjectureSpec& spec, int shard_count, bool keep_all) {
    Report r;
    r.corpus = corpus.describe();
    r.variant = spec.variant;
    r.alpha = spec.alpha.to_string();
    r.sink_free_version = spec.sink_free_version;
    r.shard_count = shard_count;
    r.keep_all_records = keep_all;
    return r;
}

}  // namespace

Report sweep(const Corpus& corpus, const ConjectureSpec& spec, const SweepOptions& options) {
    if (options.shard_count < 1 || options.shard_index < 0 || options.shard_index >= options.shard_count) {
        throw InvalidInput("shard index must lie in [0, shard count)");
    }
    Report report = empty_report(corpus, spec, options.shard_count, options.keep_all_records);
    report.shards = {options.shard_index};
    const std::uint64_t total = corpus.size();
    const auto bound = [&](std::uint64_t k) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * k / options.shard_count);
    };
    for (std::uint64_t i = bound(options.shard_index); i < bound(options.shard_index + 1); ++i) {
        std::optional<Digraph> d = corpus.at(i);
        if (!d) continue;
        if (spec.sink_free_version && !is_sink_free(*d)) continue;
        report.add(check(*d, spec, i));
    }
    std::sort(report.extremal.begin(), report.extremal.end());
    return report;
}

Report parallel_sweep(const Corpus& corpus, const ConjectureSpec& spec, int threads, bool keep_all_records) {
    if (threads < 1) throw InvalidInput("thread count must be >= 1");
    std::vector<Report> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            try {
                parts[t] = sweep(corpus, spec, {threads, t, keep_all_records});
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Report merged = parts[0];
    for (int t = 1; t < threads; ++t) merged = merge(merged, parts[t]);
    return merged;
}

Report extremal(const Corpus& corpus, const ConjectureSpec& spec) {
    Report report = empty_report(corpus, spec, 1, true);
    report.shards = {0};
    for (std::uint64_t i = 0; i < corpus.size(); ++i) {
        std::optional<Digraph> d = corpus.at(i);
        if (d) report.add(check(*d, spec, i));
    }
    std::sort(report.extremal.begin(), report.extremal.end());
    return report;
}

}  // namespace qk
