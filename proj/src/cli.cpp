#include "qk/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qk/enumerate.hpp"
#include "qk/error.hpp"
#include "qk/generators.hpp"
#include "qk/harness.hpp"
#include "qk/io.hpp"
#include "qk/kpall.hpp"
#include "qk/reductions.hpp"
#include "qk/solvers.hpp"

namespace qk::cli {

namespace {

using nlohmann::json;

struct Common {
    std::string input = "-";
    std::string output = "-";
    std::string format = "text";
};

void add_common(CLI::App* sub, Common& c, bool with_input) {
    if (with_input) sub->add_option("--input,-i", c.input, "Digraph file ('-' for stdin)");
    sub->add_option("--output,-o", c.output, "Output file ('-' for stdout)");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

Digraph read_input(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path);
        if (!file) throw InvalidInput("cannot open input file '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    // Allow the JSON form as well as the text form.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return digraph_from_json(json::parse(text));
        } catch (const json::parse_error& e) {
            throw InvalidInput(std::string("malformed digraph JSON: ") + e.what());
        }
    }
    return parse_digraph(text);
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InvalidInput("cannot open output file '" + path + "'");
    file << text;
}

std::string partition_text(const Partition& p) {
    std::string s;
    for (VertexSet part : p.parts) {
        if (!s.empty()) s += ' ';
        s += part.to_string();
    }
    return s;
}

json partition_json(const Partition& p) {
    json parts = json::array();
    for (VertexSet part : p.parts) parts.push_back(vertex_set_to_json(part));
    return {{"kind", to_string(p.kind)}, {"parts", parts}};
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
    Common common;
    std::string alg;
    std::string set;
    bool trace = false;
};

void require_quasi_kernel(const Digraph& d, VertexSet q) {
    if (!is_quasi_kernel(d, q)) {
        throw PostconditionViolation("refusing to print unverified quasi-kernel " + q.to_string());
    }
}

std::string run_solve(const SolveArgs& a, std::istream& in) {
    const Digraph d = read_input(a.common.input, in);
    json j = {{"algorithm", a.alg}, {"n", d.order()}};
    std::ostringstream text;
    text << "algorithm: " << a.alg << '\n';

    auto emit_qk = [&](VertexSet q) {
        require_quasi_kernel(d, q);
        j["quasi_kernel"] = vertex_set_to_json(q);
        j["size"] = q.size();
        j["verified"] = true;
        text << "quasi-kernel: " << q.to_string() << '\n' << "size: " << q.size() << '\n';
    };
    auto needs_set = [&] {
        if (a.set.empty()) throw InvalidInput("--alg " + a.alg + " requires --set");
    };
    if (a.alg != "kplem" && !a.set.empty()) throw InvalidInput("--set is only used by --alg kplem");
    if (a.trace && a.alg != "kpall-small") throw InvalidInput("--trace is only available for --alg kpall-small");

    if (a.alg == "min") {
        emit_qk(*min_quasi_kernel(d).witness);
    } else if (a.alg == "large") {
        const SolveResult r = max_large_quasi_kernel(d);
        emit_qk(*r.witness);
        j["covered"] = r.objective;
        text << "covered: " << r.objective << '\n';
    } else if (a.alg == "sharp") {
        const SolveResult r = max_sharp_quasi_kernel(d);
        emit_qk(*r.witness);
        j["sharp_score_doubled"] = r.objective;
        text << "sharp-score-doubled: " << r.objective << '\n';
    } else if (a.alg == "kernel") {
        const SolveResult r = find_kernel(d);
        if (r.witness) {
            if (!is_kernel(d, *r.witness)) throw PostconditionViolation("refusing to print unverified kernel");
            j["kernel"] = vertex_set_to_json(*r.witness);
            text << "kernel: " << r.witness->to_string() << '\n';
        } else {
            j["kernel"] = nullptr;
            text << "kernel: none\n";
        }
    } else if (a.alg == "heavy") {
        const VertexSet s = heavy_independent_set(d);
        const int in_count = n_minus_set(d, s).size();
        const int out_count = n_plus_set(d, s).size();
        j["independent_set"] = vertex_set_to_json(s);
        j["in_neighbors"] = in_count;
        j["out_neighbors"] = out_count;
        text << "independent-set: " << s.to_string() << '\n'
             << "in-neighbors: " << in_count << '\n'
             << "out-neighbors: " << out_count << '\n';
    } else if (a.alg == "kpall-small" || a.alg == "kpall-large" || a.alg == "kpall-sources") {
        const PartitionNumber kp = kp_number(d);
        const int k = std::max(kp.value, 2);
        j["kp"] = kp.value;
        j["k"] = k;
        j["partition"] = partition_json(kp.certificate);
        text << "kp: " << kp.value << '\n' << "partition: " << partition_text(kp.certificate) << '\n';
        if (a.alg == "kpall-small") {
            const KpallTrace t = small_qk_from_partition(d, kp.certificate);
            emit_qk(t.result);
            if (a.trace) {
                j["trace"] = trace_to_json(t);
                text << "trace: " << trace_to_json(t).dump() << '\n';
            }
        } else if (a.alg == "kpall-large") {
            const SolveResult r = large_qk_from_partition(d, kp.certificate);
            emit_qk(*r.witness);
            j["covered"] = r.objective;
            text << "covered: " << r.objective << '\n';
        } else {
            const SolveResult r = small_qk_with_sources(d, kp.certificate);
            emit_qk(*r.witness);
            j["sources"] = sources_not_sinks(d).size();
            text << "sources: " << sources_not_sinks(d).size() << '\n';
        }
    } else if (a.alg == "kplem") {
        needs_set();
        const VertexSet p = parse_vertex_list(a.set);
        if (!p.subset_of(d.vertices())) throw InvalidInput("--set has vertices outside the digraph");
        emit_qk(quasi_kernel_covering(d, p));
        j["set"] = vertex_set_to_json(p);
    } else {
        throw InvalidInput("unknown --alg '" + a.alg + "'");
    }
    return a.common.format == "json" ? j.dump(2) + "\n" : text.str();
}

// --- check / sweep -----------------------------------------------------------

std::string record_text(const Record& r, const ConjectureSpec& spec) {
    std::ostringstream s;
    s << "conjecture: " << to_string(spec.variant) << " alpha=" << spec.alpha.to_string() << '\n'
      << "n: " << r.n << '\n'
      << "objective: " << r.objective << (spec.variant == Variant::sharp ? " (doubled)" : "") << '\n'
      << "bound: " << r.bound.to_string() << '\n'
      << "witness: " << r.witness.to_string() << '\n'
      << "result: " << (r.pass ? "pass" : "FAIL") << '\n';
    return s.str();
}

struct CheckArgs {
    Common common;
    std::string conjecture;
    std::string alpha;
    bool sink_free = false;
};

int run_check(const CheckArgs& a, std::istream& in, std::ostream& out) {
    const Digraph d = read_input(a.common.input, in);
    const Variant v = parse_variant(a.conjecture);
    const ConjectureSpec spec(v, RationalAlpha::parse(a.alpha), a.sink_free || v == Variant::small);
    const Record r = check(d, spec);
    json j = {{"conjecture", to_string(v)},
              {"alpha", spec.alpha.to_string()},
              {"n", r.n},
              {"objective", r.objective},
              {"bound", {{"num", r.bound.num()}, {"den", r.bound.den()}}},
              {"witness", vertex_set_to_json(r.witness)},
              {"pass", r.pass}};
    write_output(a.common.output, out, a.common.format == "json" ? j.dump(2) + "\n" : record_text(r, spec));
    return r.pass ? kExitOk : kExitConjectureFailure;
}

struct SweepArgs {
    Common common;
    int n = -1;
    bool sink_free = false;
    bool canonical = false;
    int shards = 1;
    int shard = 0;
    int threads = 1;
    std::string conjecture;
    std::string alpha;
    std::string csv;
    bool failures_only = false;
};

int run_sweep(const SweepArgs& a, std::ostream& out) {
    const Variant v = parse_variant(a.conjecture);
    if (v == Variant::small && !a.sink_free) {
        throw InvalidInput("--conjecture small is stated for sink-free digraphs; add --sink-free");
    }
    if (a.threads > 1 && a.shards > 1) throw InvalidInput("--threads cannot be combined with --shards");
    const ConjectureSpec spec(v, RationalAlpha::parse(a.alpha), a.sink_free);
    const Corpus corpus = Corpus::enumeration(
        DigraphEnumeration(a.n, a.sink_free ? DigraphFilter::sink_free : DigraphFilter::all, a.canonical));
    const Report report = a.threads > 1
                              ? parallel_sweep(corpus, spec, a.threads, !a.failures_only)
                              : sweep(corpus, spec, {a.shards, a.shard, !a.failures_only});
    if (!a.csv.empty()) write_output(a.csv, out, report.to_csv());
    std::string text;
    if (a.common.format == "json") {
        text = report.to_json().dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "corpus: " << report.corpus << '\n'
          << "conjecture: " << to_string(v) << " alpha=" << report.alpha << '\n'
          << (a.threads > 1 ? "threads: " + std::to_string(a.threads) : "shard: " + std::to_string(a.shard) + "/" + std::to_string(a.shards)) << '\n'
          << "checked: " << report.count << '\n'
          << "failures: " << report.failures.size() << '\n'
          << "min-slack: " << (report.min_slack ? report.min_slack->to_string() : "n/a") << '\n';
        for (std::uint64_t idx : report.failures) {
            for (const Record& r : report.records) {
                if (r.index == idx) s << "failure: index=" << idx << " adjacency=" << r.adjacency << '\n';
            }
        }
        text = s.str();
    }
    write_output(a.common.output, out, text);
    return report.ok() ? kExitOk : kExitConjectureFailure;
}

// --- gen / kp / reduce -------------------------------------------------------

std::string digraph_out(const Digraph& d, const std::string& format) {
    return format == "json" ? digraph_to_json(d).dump() + "\n" : serialize_digraph(d);
}

std::string run_reduce(const Common& c, const std::string& kind, std::istream& in) {
    const Digraph d = read_input(c.input, in);
    const auto colon = kind.find(':');
    const std::string name = kind.substr(0, colon);
    auto multiplicity = [&] {
        if (colon == std::string::npos) throw InvalidInput("--kind " + name + " needs a multiplicity, e.g. " + name + ":2");
        try {
            std::size_t used = 0;
            const int m = std::stoi(kind.substr(colon + 1), &used);
            if (used != kind.size() - colon - 1) throw std::invalid_argument("trailing");
            return m;
        } catch (const std::exception&) {
            throw InvalidInput("bad multiplicity in --kind " + kind);
        }
    };
    Blowup b;
    json extra = json::object();
    if (name == "gadget") {
        b = add_source_gadget(d, multiplicity());
    } else if (name == "wblowup") {
        const SourcesReduction red = build_sources_reduction(d, multiplicity());
        b = red.blowup;
        extra["rest_embedding"] = red.rest.embedding;
        extra["sources"] = vertex_set_to_json(red.sources);
        extra["multiplicities"] = red.multiplicities;
    } else if (name == "c3blowup") {
        if (colon != std::string::npos) throw InvalidInput("--kind c3blowup takes no parameter");
        b = c3_blowup(d);
    } else {
        throw InvalidInput("unknown --kind '" + kind + "' (gadget:C|wblowup:C|c3blowup)");
    }
    json map = blowup_map_to_json(b.map);
    map.update(extra);
    if (c.format == "json") return json{{"digraph", digraph_to_json(b.graph)}, {"map", map}}.dump(2) + "\n";
    return serialize_digraph(b.graph) + "# map: " + map.dump() + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quasi-kernel solvers, reductions and conjecture harness", "qk"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a (quasi-)kernel or related set");
    add_common(solve_cmd, solve.common, true);
    solve_cmd->add_option("--alg", solve.alg, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"min", "large", "sharp", "kernel", "heavy", "kpall-small", "kpall-large",
                               "kpall-sources", "kplem"}));
    solve_cmd->add_option("--set", solve.set, "Kernel-perfect set P for kplem, e.g. 0,2");
    solve_cmd->add_flag("--trace", solve.trace, "Include the construction trace (kpall-small)");

    CheckArgs chk;
    auto* check_cmd = app.add_subcommand("check", "Check one statement on one digraph");
    add_common(check_cmd, chk.common, true);
    check_cmd->add_option("--conjecture", chk.conjecture, "small|sources|large|sharp")->required();
    check_cmd->add_option("--alpha", chk.alpha, "Exact fraction P/Q")->required();
    check_cmd->add_flag("--sink-free", chk.sink_free, "Require a sink-free input");

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Check a statement on every digraph of order n");
    add_common(sweep_cmd, sw.common, false);
    sweep_cmd->add_option("--n", sw.n, "Vertex count")->required()->check(CLI::Range(0, kMaxCanonicalEnumerationOrder));
    sweep_cmd->add_flag("--sink-free", sw.sink_free, "Only sink-free digraphs");
    sweep_cmd->add_flag("--canonical", sw.canonical, "One digraph per isomorphism class");
    auto* shards_opt = sweep_cmd->add_option("--shards", sw.shards, "Number of shards")->check(CLI::PositiveNumber);
    auto* shard_opt = sweep_cmd->add_option("--shard", sw.shard, "Shard index")->check(CLI::NonNegativeNumber);
    shard_opt->needs(shards_opt);
    sweep_cmd->add_option("--threads", sw.threads, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--conjecture", sw.conjecture, "small|sources|large|sharp")->required();
    sweep_cmd->add_option("--alpha", sw.alpha, "Exact fraction P/Q")->required();
    sweep_cmd->add_option("--csv", sw.csv, "Also write a CSV summary to this path");
    sweep_cmd->add_flag("--failures-only", sw.failures_only, "Keep only failing and extremal records");

    Common gen_common;
    std::string family;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a named digraph");
    add_common(gen_cmd, gen_common, false);
    gen_cmd->add_option("--family", family, "cycle:N|path:N|edgeless:N|circulant:N|c3pow:K|"
                                            "random:N:P/Q:SEED|tournament:N:SEED|union:SPEC,...")
        ->required();

    Common kp_common;
    auto* kp_cmd = app.add_subcommand("kp", "Kernel-perfect number with a certifying partition");
    add_common(kp_cmd, kp_common, true);

    Common reduce_common;
    std::string kind;
    auto* reduce_cmd = app.add_subcommand("reduce", "Apply a gadget or blowup");
    add_common(reduce_cmd, reduce_common, true);
    reduce_cmd->add_option("--kind", kind, "gadget:C|wblowup:C|c3blowup")->required();

    std::vector<const char*> argv{"qk"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        if (*solve_cmd) {
            write_output(solve.common.output, out, run_solve(solve, in));
        } else if (*check_cmd) {
            return run_check(chk, in, out);
        } else if (*sweep_cmd) {
            return run_sweep(sw, out);
        } else if (*gen_cmd) {
            write_output(gen_common.output, out, digraph_out(make(parse_family(family)), gen_common.format));
        } else if (*kp_cmd) {
            const Digraph d = read_input(kp_common.input, in);
            const PartitionNumber kp = kp_number(d);
            const std::string text =
                kp_common.format == "json"
                    ? json{{"kp", kp.value}, {"partition", partition_json(kp.certificate)}}.dump(2) + "\n"
                    : "kp: " + std::to_string(kp.value) + "\npartition: " + partition_text(kp.certificate) + "\n";
            write_output(kp_common.output, out, text);
        } else if (*reduce_cmd) {
            write_output(reduce_common.output, out, run_reduce(reduce_common, kind, in));
        }
    } catch (const std::exception& e) {
        err << "qk: error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitOk;
}

}  // namespace qk::cli
