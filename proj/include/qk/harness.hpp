#ifndef QK_HARNESS_HPP
#define QK_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qk/digraph.hpp"
#include "qk/enumerate.hpp"
#include "qk/rational.hpp"

namespace qk {

inline constexpr const char* kHarnessVersion = "1.0.0";
inline constexpr const char* kReportSchema = "qk-report/1";

/// The four statements checked by the harness, for a digraph on n vertices:
///   small   (I)   sink-free => some quasi-kernel has |Q| <= (1 - alpha)n
///   sources (II)  some quasi-kernel has |Q| <= n - alpha*s, s = non-sink sources
///   large   (III) some quasi-kernel has |N-[Q]| >= alpha*n
///   sharp   (IV)  some quasi-kernel has |Q|/2 + |N-(Q)| >= alpha*n
enum class Variant { small, sources, large, sharp };

std::string to_string(Variant v);
Variant parse_variant(std::string_view name);

struct ConjectureSpec {
    Variant variant;
    RationalAlpha alpha;
    /// Restrict to sink-free digraphs. Required for `small`.
    bool sink_free_version;

    ConjectureSpec(Variant variant, RationalAlpha alpha, bool sink_free_version);
};

/// One checked digraph. For `sharp`, objective and bound are both doubled.
struct Record {
    std::uint64_t index = 0;
    int n = 0;
    std::string adjacency;
    std::int64_t objective = 0;
    Rational bound;
    bool pass = false;
    VertexSet witness;

    /// Margin by which the statement holds, divided by n (by 2n for `sharp`).
    /// Negative iff the record fails. Zero on the null digraph.
    Rational slack(Variant variant) const;

    bool operator==(const Record&) const = default;
};

/// Evaluate the statement exactly on D using the brute-force optimum.
/// Throws InvalidInput for `small` on a digraph with sinks.
Record check(const Digraph& d, const ConjectureSpec& spec, std::uint64_t index = 0);

/// Either an enumeration or an explicit list of digraphs.
class Corpus {
public:
    static Corpus enumeration(DigraphEnumeration e);
    static Corpus list(std::string description, std::vector<Digraph> graphs);

    std::uint64_t size() const;
    /// Empty when the enumeration filter rejects item i.
    std::optional<Digraph> at(std::uint64_t i) const;
    const std::string& describe() const { return description_; }

private:
    std::string description_;
    std::optional<DigraphEnumeration> enumeration_;
    std::vector<Digraph> graphs_;
};

/// `count` sink-free (optionally) random digraphs with n uniform in [min_n, max_n].
/// Item i uses derive_seed(seed, i, attempt) and retries until accepted.
Corpus random_corpus(int count, int min_n, int max_n, Rational p, std::uint64_t seed, bool sink_free);

struct Report {
    std::string corpus;
    Variant variant = Variant::small;
    std::string alpha;
    bool sink_free_version = false;
    int shard_count = 1;
    std::vector<int> shards;
    /// When false only failing and extremal records are retained.
    bool keep_all_records = true;
    std::string harness_version = kHarnessVersion;

    std::vector<Record> records;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> failures;
    std::optional<Rational> min_slack;
    std::vector<std::uint64_t> extremal;

    void add(Record r);
    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
    /// adjacency_hex,n,objective,bound_num,bound_den,pass
    std::string to_csv() const;
};

/// Combine reports of disjoint shards of the same sweep. Associative and
/// independent of argument order.
Report merge(const Report& a, const Report& b);

struct SweepOptions {
    int shard_count = 1;
    int shard_index = 0;
    bool keep_all_records = true;
};

/// Check every digraph of shard `shard_index` (a contiguous index range).
/// With a sink-free spec, digraphs with sinks are skipped.
Report sweep(const Corpus& corpus, const ConjectureSpec& spec, const SweepOptions& options = {});

/// Run all shards on `threads` workers and merge.
Report parallel_sweep(const Corpus& corpus, const ConjectureSpec& spec, int threads, bool keep_all_records);

/// Like sweep over the whole corpus, but without skipping anything; the
/// extremal field lists the digraphs with the least normalised slack.
Report extremal(const Corpus& corpus, const ConjectureSpec& spec);

}  // namespace qk

#endif  // QK_HARNESS_HPP
