#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrows.hpp"
#include "canonical.hpp"
#include "classes.hpp"
#include "codec.hpp"
#include "degrees.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace ramsey::cli {

inline constexpr const char* engine_version = "1.0.0";

enum ExitCode : int { ok = 0, invalid_input = 2, limit_exceeded = 3, undetermined = 4 };

struct Options {
    std::string command;
    std::string input = "-";
    std::string format;  // empty: infer from file extension
    int n = 2;
    int k = 2;
    int t = 1;
    int max_size = 4;
    int target_size = 3;
    unsigned long long budget = default_arrow_budget;
    std::string cache_dir;
    std::string output = "tsv";
    int jobs = 1;
    std::uint64_t seed = 1;
    int count = 100;
    std::string class_kind = "n_colorable";
    std::string mode = "ordered";
    std::string method = "dedup";
    int max_m = 3;
    int max_l = 2;
    bool ordered = false;
};

// ---------------------------------------------------------------------------
// Input handling

inline std::string read_all(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") return {std::istreambuf_iterator<char>(stdin_stream), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

inline Format infer_format(const Options& opt, const std::string& path) {
    if (!opt.format.empty()) return parse_format(opt.format);
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".json") return Format::ocg_json;
    if (ext == ".txt" || ext == ".edges" || ext == ".el") return Format::edge_list;
    return Format::graph6;
}

/// graph6 and edge lists carry no order flag; they are read as plain graphs
/// unless --ordered is given.
inline OrderedColoredGraph load(const Options& opt, const std::string& path, std::istream& stdin_stream) {
    const auto format = infer_format(opt, path);
    auto s = read_structure(format, read_all(path, stdin_stream));
    if (format != Format::ocg_json) s.ordered = opt.ordered;
    return s;
}

/// Parses "z=a.g6,y=b.g6,x=c.g6" into (role, path) pairs.
inline std::vector<std::pair<std::string, std::string>> parse_roles(const std::string& spec) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("expected role=path in '" + item + "'");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

inline GadgetMode parse_mode(const std::string& mode) {
    if (mode == "ordered" || mode == "ordered_colored" || mode == "ordered-colored") return GadgetMode::ordered_colored;
    if (mode == "monotone") return GadgetMode::monotone;
    throw InvalidInput("unknown mode '" + mode + "' (expected ordered or monotone)");
}

// ---------------------------------------------------------------------------
// Cache

/// 64-bit FNV-1a; stable across platforms and runs.
inline std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct CacheEntry {
    std::string key;
    std::string value;
    std::string engine_version;
    int exit_code = 0;
};

class Cache {
public:
    explicit Cache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<CacheEntry> lookup(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path_for(key), std::ios::binary);
        if (!in) return std::nullopt;
        CacheEntry e;
        std::string line;
        if (!std::getline(in, line) || line.rfind("engine_version\t", 0) != 0) return std::nullopt;
        e.engine_version = line.substr(15);
        if (!std::getline(in, line) || line != "key\t" + escape(key)) return std::nullopt;
        if (!std::getline(in, line) || line.rfind("exit\t", 0) != 0) return std::nullopt;
        e.exit_code = std::stoi(line.substr(5));
        e.value.assign(std::istreambuf_iterator<char>(in), {});
        e.key = key;
        if (e.engine_version != engine_version) return std::nullopt;
        return e;
    }

    void store(const CacheEntry& e) const {
        if (!enabled()) return;
        std::filesystem::create_directories(dir_);
        const auto final_path = path_for(e.key);
        const auto tmp = final_path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << "engine_version\t" << e.engine_version << "\nkey\t" << escape(e.key) << "\nexit\t"
                << e.exit_code << "\n"
                << e.value;
        }
        std::filesystem::rename(tmp, final_path);
    }

private:
    static std::string escape(const std::string& s) {
        std::string out;
        for (char c : s) out += (c == '\n') ? std::string("\\n") : std::string(1, c);
        return out;
    }

    std::filesystem::path path_for(const std::string& key) const {
        std::ostringstream name;
        name << std::hex << fnv1a(key) << ".entry";
        return std::filesystem::path(dir_) / name.str();
    }

    std::string dir_;
};

/// Cache key part for a structure. Label-invariant commands pass
/// `up_to_isomorphism` so isomorphic inputs share an entry.
inline std::string structure_key(const OrderedColoredGraph& s, bool up_to_isomorphism) {
    if (up_to_isomorphism && s.vertex_count() <= default_canonical_cap)
        return "iso:" + std::to_string(s.vertex_count()) + ":" + canonical_form(s.graph).certificate;
    std::string key = "exact:" + std::to_string(s.vertex_count()) + ":" + ordered_certificate(s);
    key += s.ordered ? ":o" : ":u";
    key += ":n" + std::to_string(s.n);
    return key;
}

// ---------------------------------------------------------------------------
// Output helpers

inline std::string colors_field(const OrderedColoredGraph& s) {
    if (!s.colors) return "-";
    std::string out;
    for (std::size_t i = 0; i < s.colors->size(); ++i) out += (i ? "," : "") + std::to_string((*s.colors)[i]);
    return out;
}

inline std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out;
}

inline std::string scalar(const Options& opt, const std::string& name, std::uint64_t value) {
    if (opt.output == "json") return nlohmann::json{{name, value}}.dump() + "\n";
    return std::to_string(value) + "\n";
}

inline std::string structures_out(const Options& opt, const std::vector<OrderedColoredGraph>& items) {
    if (opt.output == "json") return write_ocg_json_array(items);
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += std::to_string(i + 1) + "\t" + write_graph6(items[i].graph) + "\t" + colors_field(items[i]) + "\n";
    return out;
}

inline std::string coloring_table(const std::vector<Embedding>& copies, const ColoringOfCopies& coloring) {
    std::string out = "copy\timage\tcolor\n";
    for (std::size_t i = 0; i < copies.size(); ++i)
        out += std::to_string(i + 1) + "\t" + vertex_list(copies[i].image()) + "\t" +
               std::to_string(coloring.colors[i]) + "\n";
    return out;
}

inline nlohmann::json coloring_json(const std::vector<Embedding>& copies, const ColoringOfCopies& coloring) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < copies.size(); ++i)
        rows.push_back({{"copy", i + 1}, {"image", copies[i].image()}, {"color", coloring.colors[i]}});
    return {{"universe", coloring.universe}, {"copies", rows}};
}

// ---------------------------------------------------------------------------
// Commands

struct Result {
    std::string out;
    int code = ExitCode::ok;
    bool from_cache = false;
};

inline Result run_command(const Options& opt, std::istream& in, const Cache& cache, std::string& cache_key) {
    const std::string params = "|n=" + std::to_string(opt.n) + "|k=" + std::to_string(opt.k) +
                               "|t=" + std::to_string(opt.t) + "|max=" + std::to_string(opt.max_size) +
                               "|target=" + std::to_string(opt.target_size) + "|budget=" +
                               std::to_string(opt.budget) + "|out=" + opt.output + "|class=" + opt.class_kind +
                               "|mode=" + opt.mode + "|method=" + opt.method + "|m=" + std::to_string(opt.max_m) +
                               "|l=" + std::to_string(opt.max_l) + "|seed=" + std::to_string(opt.seed) +
                               "|count=" + std::to_string(opt.count) + "|ordered=" + std::to_string(opt.ordered);
    const std::string& cmd = opt.command;
    cache_key = cmd + params;

    if (cmd == "sigma") {
        auto x = load(opt, opt.input, in);
        x.ordered = true;
        x.colors.reset();
        cache_key += "|" + structure_key(x, true);
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        return {scalar(opt, "sigma", sigma(x, opt.n))};
    }
    if (cmd == "tau") {
        const auto x = load(opt, opt.input, in);
        cache_key += "|" + structure_key(x, true);
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        if (opt.method == "burnside") return {scalar(opt, "tau", tau_burnside(x.graph, opt.n))};
        if (opt.method != "dedup") throw InvalidInput("unknown method '" + opt.method + "'");
        return {scalar(opt, "tau", tau(x.graph, opt.n))};
    }
    if (cmd == "autdeg") {
        const auto x = load(opt, opt.input, in);
        cache_key += "|" + structure_key(x, true);
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        if (opt.output == "json") {
            const auto group = automorphism_group(x.graph, default_canonical_cap, 0);
            return {nlohmann::json{{"autdeg", factorial(x.vertex_count()) / group.order},
                                   {"aut_order", group.order}}
                        .dump() +
                    "\n"};
        }
        return {scalar(opt, "autdeg", aut_degree(x.graph))};
    }
    if (cmd == "chrom") {
        const auto x = load(opt, opt.input, in);
        cache_key += "|" + structure_key(x, true);
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        return {scalar(opt, "chromatic_number", static_cast<std::uint64_t>(chromatic_number(x.graph)))};
    }
    if (cmd == "member") {
        const ClassSpec spec{parse_class_kind(opt.class_kind), opt.n};
        auto x = load(opt, opt.input, in);
        if (is_ordered_kind(spec.kind) && infer_format(opt, opt.input) != Format::ocg_json) x.ordered = true;
        cache_key += "|" + structure_key(x, !is_ordered_kind(spec.kind));
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        const bool member = is_member(x, spec);
        if (opt.output == "json") return {nlohmann::json{{"member", member}}.dump() + "\n"};
        return {member ? "true\n" : "false\n"};
    }
    if (cmd == "enum") {
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        const ClassSpec spec{parse_class_kind(opt.class_kind), opt.n};
        const auto members = enumerate_members(spec, opt.max_size, 0, opt.jobs);
        if (opt.output == "json") {
            std::vector<OrderedColoredGraph> items;
            for (const auto& m : members) items.push_back(m.structure);
            return {write_ocg_json_array(items)};
        }
        std::string out;
        for (const auto& m : members) out += write_graph6(m.structure.graph) + "\t" + colors_field(m.structure) + "\n";
        return {out};
    }
    if (cmd == "extensions") {
        const auto mode = parse_mode(opt.mode);
        auto x = load(opt, opt.input, in);
        x.colors.reset();
        x.ordered = mode == GadgetMode::ordered_colored;
        cache_key += "|" + structure_key(x, false);
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        return {structures_out(opt, gadget_catalog(x, opt.n, mode).items())};
    }
    if (cmd == "gadget") {
        const auto mode = parse_mode(opt.mode);
        auto x = load(opt, opt.input, in);
        x.colors.reset();
        x.ordered = mode == GadgetMode::ordered_colored;
        cache_key += "|" + structure_key(x, false);
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        const auto g = build_gadget_Y(x, opt.n, mode);
        if (opt.output == "json") return {write_ocg_json(g)};
        return {write_graph6(g.graph) + "\t" + colors_field(g) + "\n"};
    }
    if (cmd == "arrow" || cmd == "sim-arrow") {
        std::optional<OrderedColoredGraph> z, y;
        std::vector<OrderedColoredGraph> xs;
        for (const auto& [role, path] : parse_roles(opt.input)) {
            auto s = load(opt, path, in);
            cache_key += "|" + role + "=" + structure_key(s, false);
            if (role == "z") z = std::move(s);
            else if (role == "y") y = std::move(s);
            else if (role == "x") xs.push_back(std::move(s));
            else throw InvalidInput("unknown role '" + role + "' (expected z, y, x)");
        }
        if (!z || !y || xs.empty()) throw InvalidInput("arrow needs z=, y= and x= inputs");
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        if (cmd == "arrow") {
            if (xs.size() != 1) throw InvalidInput("arrow takes exactly one x= pattern");
            const ArrowQuery q{*z, *y, xs.front(), opt.k, opt.t};
            const auto r = arrow_check(q, opt.budget);
            if (opt.output == "json") {
                nlohmann::json j{{"holds", r.holds}, {"colorings_examined", r.colorings_examined}};
                if (r.bad_coloring) j["bad_coloring"] = coloring_json(enumerate_copies(q.pattern, q.host), *r.bad_coloring);
                return {j.dump() + "\n"};
            }
            std::string out = r.holds ? "holds\n" : "fails\n";
            if (r.bad_coloring) out += coloring_table(enumerate_copies(q.pattern, q.host), *r.bad_coloring);
            return {out};
        }
        const auto r = simultaneous_arrow_check(*z, *y, xs, opt.k, opt.budget);
        if (opt.output == "json") {
            nlohmann::json j{{"holds", r.holds}, {"colorings_examined", r.colorings_examined}};
            if (r.bad_coloring) {
                nlohmann::json per = nlohmann::json::array();
                for (std::size_t p = 0; p < xs.size(); ++p)
                    per.push_back(coloring_json(enumerate_copies(xs[p], *z), (*r.bad_coloring)[p]));
                j["bad_coloring"] = per;
            }
            return {j.dump() + "\n"};
        }
        std::string out = r.holds ? "holds\n" : "fails\n";
        if (r.bad_coloring)
            for (std::size_t p = 0; p < xs.size(); ++p)
                out += "pattern " + std::to_string(p + 1) + "\n" +
                       coloring_table(enumerate_copies(xs[p], *z), (*r.bad_coloring)[p]);
        return {out};
    }
    if (cmd == "alpha") {
        const auto mode = parse_mode(opt.mode);
        std::optional<OrderedColoredGraph> host, x;
        for (const auto& [role, path] : parse_roles(opt.input)) {
            auto s = load(opt, path, in);
            cache_key += "|" + role + "=" + structure_key(s, false);
            if (role == "t") host = std::move(s);
            else if (role == "x") x = std::move(s);
            else throw InvalidInput("unknown role '" + role + "' (expected t, x)");
        }
        if (!host || !x) throw InvalidInput("alpha needs t= and x= inputs");
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        x->ordered = mode == GadgetMode::ordered_colored;
        const auto typed = extension_type_coloring(*host, *x, mode);
        if (opt.output == "json") return {coloring_json(typed.copies, typed.alpha).dump() + "\n"};
        return {coloring_table(typed.copies, typed.alpha)};
    }
    if (cmd == "degree-search") {
        const ClassSpec spec{parse_class_kind(opt.class_kind), opt.n};
        auto x = load(opt, opt.input, in);
        cache_key += "|" + structure_key(x, false);
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        DegreeCaps caps;
        caps.target_max = opt.target_size;
        caps.host_max = opt.max_size;
        caps.budget = opt.budget;
        const auto r = empirical_degree(x, spec, opt.k, caps);
        const bool determined = r.status == DegreeStatus::determined;
        std::string out;
        if (opt.output == "json") {
            nlohmann::json j{{"status", determined ? "determined" : "UNDETERMINED"},
                             {"lower_bound", r.lower_bound},
                             {"type_count", r.type_count},
                             {"arrow_checks", r.arrow_checks}};
            if (determined) j["degree"] = r.degree;
            else j["tested_t"] = r.tested_t;
            if (r.lower_bound_witness) j["lower_bound_witness"] = *r.lower_bound_witness;
            if (r.unresolved_target) j["unresolved_target"] = *r.unresolved_target;
            out = j.dump() + "\n";
        } else {
            out = std::string("status\t") + (determined ? "determined" : "UNDETERMINED") + "\n";
            if (determined) out += "degree\t" + std::to_string(r.degree) + "\n";
            else out += "tested_t\t" + std::to_string(r.tested_t) + "\n";
            out += "lower_bound\t" + std::to_string(r.lower_bound) + "\n";
            out += "type_count\t" + std::to_string(r.type_count) + "\n";
            out += "arrow_checks\t" + std::to_string(r.arrow_checks) + "\n";
            if (r.unresolved_target) out += "unresolved_target\t" + *r.unresolved_target + "\n";
        }
        return {out, determined ? ExitCode::ok : ExitCode::undetermined};
    }
    if (cmd == "report-elementary") {
        if (auto hit = cache.lookup(cache_key)) return {hit->value, hit->exit_code, true};
        const auto rows = elementary_report(opt.n, opt.max_m, opt.max_l);
        auto flag = [](bool d) { return d ? "DISCREPANCY" : "ok"; };
        if (opt.output == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows)
                arr.push_back({{"n", r.n}, {"m", r.m}, {"l", r.l}, {"family", r.family()},
                               {"sigma_closed_form", r.sigma_closed}, {"sigma_enumerated", r.sigma_enumerated},
                               {"sigma_flag", flag(r.sigma_discrepancy())}, {"tau_closed_form", r.tau_closed},
                               {"tau_enumerated", r.tau_enumerated}, {"tau_flag", flag(r.tau_discrepancy())}});
            return {arr.dump() + "\n"};
        }
        std::string out =
            "n\tm\tl\tfamily\tsigma_closed_form\tsigma_enumerated\tsigma_flag\ttau_closed_form\ttau_enumerated\ttau_flag\n";
        for (const auto& r : rows)
            out += std::to_string(r.n) + "\t" + std::to_string(r.m) + "\t" + std::to_string(r.l) + "\t" + r.family() +
                   "\t" + std::to_string(r.sigma_closed) + "\t" + std::to_string(r.sigma_enumerated) + "\t" +
                   flag(r.sigma_discrepancy()) + "\t" + std::to_string(r.tau_closed) + "\t" +
                   std::to_string(r.tau_enumerated) + "\t" + flag(r.tau_discrepancy()) + "\n";
        return {out};
    }
    if (cmd == "check-reorder") {
        // Random properly colored ordered graphs; monotone_reorder must be
        // monotone, idempotent and keep each color class's internal order.
        std::mt19937_64 rng(opt.seed);
        int failures = 0;
        for (int trial = 0; trial < opt.count; ++trial) {
            const int v = std::uniform_int_distribution<int>(0, std::max(0, opt.max_size))(rng);
            const int n = std::uniform_int_distribution<int>(1, std::max(1, opt.n))(rng);
            std::vector<Color> colors(static_cast<std::size_t>(v));
            for (auto& c : colors) c = std::uniform_int_distribution<int>(1, n)(rng);
            const Graph g = Graph::from_predicate(v, [&](Vertex a, Vertex b) {
                return colors[a] != colors[b] && std::bernoulli_distribution(0.5)(rng);
            });
            const auto z = colored_ordered(g, n, colors);
            const auto r = monotone_reorder(z);
            const auto seq = monotone_order(z);
            bool good = is_monotone(r) && monotone_reorder(r) == r && is_proper_coloring(r);
            for (std::size_t i = 0; i + 1 < seq.size() && good; ++i)
                if (z.color(seq[i]) == z.color(seq[i + 1])) good = seq[i] < seq[i + 1];
            if (!good) ++failures;
        }
        std::string out = "trials\t" + std::to_string(opt.count) + "\nfailures\t" + std::to_string(failures) + "\n";
        return {out, failures == 0 ? ExitCode::ok : ExitCode::invalid_input};
    }
    throw InvalidInput("unknown command '" + cmd + "'");
}

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"sigma", "tau", "autdeg", "chrom", "member", "enum",
                                                "extensions", "arrow", "sim-arrow", "gadget", "alpha",
                                                "degree-search", "report-elementary", "check-reorder"};
    return names;
}

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ramsey degrees of n-colorable and n-chromatic graphs"};
    app.require_subcommand(1, 1);
    Options opt;
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--n", opt.n, "number of colors / class parameter");
        sub->add_option("--input", opt.input, "input path, '-' for stdin, or role=path,... lists");
        sub->add_option("--format", opt.format, "graph6 | edges | ocg-json (default: from extension)");
        sub->add_option("--k", opt.k, "colors for copies");
        sub->add_option("--t", opt.t, "tolerated colors");
        sub->add_option("--max-size", opt.max_size, "largest structure to enumerate / host size cap");
        sub->add_option("--target-size", opt.target_size, "largest target in degree-search");
        sub->add_option("--budget", opt.budget, "search node budget");
        sub->add_option("--cache", opt.cache_dir, "result cache directory");
        sub->add_option("--output", opt.output, "tsv | json")->check(CLI::IsMember({"tsv", "json"}));
        sub->add_option("--jobs", opt.jobs, "worker threads");
        sub->add_option("--seed", opt.seed, "seed for randomized checks");
        sub->add_option("--count", opt.count, "number of random trials");
        sub->add_option("--class", opt.class_kind, "class kind");
        sub->add_option("--mode", opt.mode, "ordered | monotone");
        sub->add_option("--method", opt.method, "dedup | burnside");
        sub->add_option("--max-m", opt.max_m, "largest number of parts");
        sub->add_option("--max-l", opt.max_l, "largest part size");
        sub->add_flag("--ordered", opt.ordered, "read graph6/edge inputs as ordered by vertex index");
        sub->callback([&opt, sub] { opt.command = sub->get_name(); });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::invalid_input;
    }

    try {
        if (opt.jobs < 1) throw InvalidInput("--jobs must be at least 1");
        const Cache cache(opt.cache_dir);
        std::string key;
        const auto result = run_command(opt, in, cache, key);
        if (cache.enabled() && !result.from_cache) cache.store({key, result.out, engine_version, result.code});
        out << result.out;
        return result.code;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::invalid_input;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::limit_exceeded;
    }
}

} // namespace ramsey::cli
