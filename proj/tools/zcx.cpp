// zcx: command-line front end for enumeration, census, series, generating
// tree, verification and rendering.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zcx/catalog.hpp"
#include "zcx/classify.hpp"
#include "zcx/enumerate.hpp"
#include "zcx/gentree.hpp"
#include "zcx/polyomino.hpp"
#include "zcx/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kUsageError = 2;
constexpr int kCheckFailure = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    int threads = 0;
    std::string out;
};

// Output goes to --out when given, otherwise standard output.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw UsageError("cannot open output file: " + path);
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string fraction(const zcx::Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

zcx::Rational parse_rational(const std::string& text, const char* flag)
{
    zcx::Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw UsageError(std::string("bad rational for ") + flag + ": " + text);
    q.canonicalize();
    return q;
}

// ---- enumerate ----

struct EnumerateArgs {
    int size = 0;
    bool count = false;
    bool list = false;
    std::string format = "lines";
};

int run_enumerate(const EnumerateArgs& a, const Globals& g)
{
    if (a.size < 2) throw UsageError("--size must be at least 2");
    Sink sink(g.out);
    auto& os = sink.stream();
    if (a.count) {
        const mpz_class total = zcx::count_convex_parallel(a.size, g.threads);
        if (a.format == "json") {
            ordered_json doc{{"size", a.size}, {"count", total.get_str()}};
            os << doc.dump(2) << '\n';
        } else {
            os << total.get_str() << '\n';
        }
        return 0;
    }
    const auto shapes = zcx::all_convex_parallel(a.size, g.threads);
    if (a.format == "json") {
        ordered_json doc;
        doc["size"] = a.size;
        doc["count"] = std::to_string(shapes.size());
        doc["polyominoes"] = ordered_json::array();
        for (const auto& p : shapes) doc["polyominoes"].push_back(p.encode());
        os << doc.dump(2) << '\n';
    } else if (a.format == "ascii") {
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            if (i) os << '\n';
            os << shapes[i].encode() << '\n' << shapes[i].render_ascii();
        }
    } else {
        for (const auto& p : shapes) os << p.encode() << '\n';
    }
    return 0;
}

// ---- census ----

struct CensusArgs {
    int max_size = 0;
    std::string format = "csv";
};

int run_census(const CensusArgs& a, const Globals& g)
{
    if (a.max_size < 2) throw UsageError("--max-size must be at least 2");
    std::vector<zcx::CensusRow> rows;
    std::set<std::pair<int, int>> pairs;
    for (int n = 2; n <= a.max_size; ++n) {
        rows.push_back(zcx::census(n, g.threads));
        for (const auto& kv : rows.back().by_degree_pair) pairs.insert(kv.first);
    }
    auto pair_name = [](const std::pair<int, int>& p) {
        return std::to_string(p.first) + "_" + std::to_string(p.second);
    };
    auto buckets = [](const zcx::CensusRow& r) {
        return std::vector<std::pair<const char*, const mpz_class*>>{
            {"total", &r.total_convex},   {"l_convex", &r.l_convex},     {"centered", &r.centered},
            {"four_stack", &r.four_stack}, {"z_convex", &r.z_convex},     {"ascending", &r.ascending},
            {"descending", &r.descending}, {"c12", &r.c12},               {"c21", &r.c21},
            {"c22", &r.c22},               {"directed_convex", &r.directed_convex},
        };
    };

    Sink sink(g.out);
    auto& os = sink.stream();
    if (a.format == "json") {
        ordered_json doc;
        doc["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["size"] = r.size;
            for (const auto& [name, value] : buckets(r)) j[name] = value->get_str();
            j["ascending_and_descending"] = r.ascending_and_descending.get_str();
            j["by_degree_pair"] = ordered_json::object();
            for (const auto& [p, count] : r.by_degree_pair) j["by_degree_pair"][pair_name(p)] = count.get_str();
            doc["rows"].push_back(std::move(j));
        }
        os << doc.dump(2) << '\n';
        return 0;
    }
    os << "size";
    for (const auto& [name, value] : buckets(rows.front())) os << ',' << name;
    for (const auto& p : pairs) os << ",deg_" << pair_name(p);
    os << '\n';
    for (const auto& r : rows) {
        os << r.size;
        for (const auto& [name, value] : buckets(r)) os << ',' << value->get_str();
        for (const auto& p : pairs) {
            const auto it = r.by_degree_pair.find(p);
            os << ',' << (it == r.by_degree_pair.end() ? "0" : it->second.get_str());
        }
        os << '\n';
    }
    return 0;
}

// ---- series ----

struct SeriesArgs {
    std::string name;
    std::optional<std::string> x, y, z;
    int terms = 0;
    std::string format = "json";
};

int run_series(const SeriesArgs& a, const Globals& g)
{
    const auto name = zcx::parse_gf_name(a.name);
    if (!name) throw UsageError("unknown series name: " + a.name);
    if (a.terms < 1) throw UsageError("--terms must be at least 1");
    zcx::GfParams params;
    if (a.x) params.x = parse_rational(*a.x, "--x");
    if (a.y) params.y = parse_rational(*a.y, "--y");
    if (a.z) params.z = parse_rational(*a.z, "--z");

    zcx::Series s;
    try {
        s = zcx::gf(*name, static_cast<std::size_t>(a.terms), params);
    } catch (const zcx::CatalogException& e) {
        throw UsageError(e.what());
    }

    Sink sink(g.out);
    auto& os = sink.stream();
    if (a.format == "csv") {
        os << "n,coefficient\n";
        for (std::size_t n = 0; n < s.order(); ++n) os << n << ',' << fraction(s[n]) << '\n';
        return 0;
    }
    ordered_json doc;
    doc["name"] = std::string(zcx::name_of(*name));
    doc["params"] = ordered_json::object();
    if (params.x) doc["params"]["x"] = fraction(*params.x);
    if (params.y) doc["params"]["y"] = fraction(*params.y);
    if (params.z) doc["params"]["z"] = fraction(*params.z);
    doc["coeffs"] = ordered_json::array();
    for (std::size_t n = 0; n < s.order(); ++n) doc["coeffs"].push_back(fraction(s[n]));
    os << doc.dump(2) << '\n';
    return 0;
}

// ---- gentree ----

struct GentreeArgs {
    int max_size = 0;
    std::string mode = "labels";
    std::optional<int> dump_level;
};

constexpr int kMaxConstruct = 11;

int run_gentree(const GentreeArgs& a, const Globals& g)
{
    if (a.max_size < 2) throw UsageError("--max-size must be at least 2");
    if (a.dump_level && (*a.dump_level < 2 || *a.dump_level > a.max_size))
        throw UsageError("--dump-level must lie in 2..max-size");
    if (a.mode == "construct" && a.max_size > kMaxConstruct)
        throw UsageError("construct mode keeps whole levels in memory; --max-size is limited to " +
                         std::to_string(kMaxConstruct));

    std::vector<zcx::LabelLevel> levels;
    if (a.mode == "labels") {
        levels = zcx::count_levels(a.max_size, g.threads);
    } else {
        // Labels read off the constructed polyominoes, so both modes share
        // one output format.
        for (const auto& shapes : zcx::construct_levels(a.max_size, g.threads)) {
            zcx::LabelLevel level;
            level.level = shapes.empty() ? 0 : shapes.front().size();
            for (const auto& p : shapes) level.counts[zcx::label_of(p)] += 1;
            levels.push_back(std::move(level));
        }
    }

    Sink sink(g.out);
    auto& os = sink.stream();
    if (a.dump_level) {
        for (const auto& line : zcx::dump_lines(levels[static_cast<std::size_t>(*a.dump_level - 2)])) os << line << '\n';
        return 0;
    }
    os << "size,total,centered,non_centered,rectangular,labels\n";
    for (const auto& level : levels)
        os << level.level << ',' << level.total().get_str() << ',' << level.centered().get_str() << ','
           << level.non_centered().get_str() << ',' << level.rectangular().get_str() << ',' << level.counts.size()
           << '\n';
    return 0;
}

// ---- verify ----

struct VerifyArgs {
    std::string suite = "all";
    int max_size = 0;
    std::optional<std::string> fixtures;
    std::string format = "text";
    bool timings = false;
};

int run_verify(const VerifyArgs& a, const Globals& g)
{
    if (a.max_size < 0 || a.max_size == 1) throw UsageError("--max-size must be at least 2");
    zcx::VerifyOptions o;
    o.suite = a.suite;
    o.max_size = a.max_size;
    o.fixtures = a.fixtures;
    o.threads = g.threads;
    const auto reports = zcx::run_suites(o);
    Sink sink(g.out);
    sink.stream() << (a.format == "json" ? zcx::render_json(reports, a.timings) : zcx::render_text(reports, a.timings));
    for (const auto& r : reports)
        if (!r.passed()) return kCheckFailure;
    return 0;
}

// ---- render ----

int run_render(const std::string& encoding, const Globals& g)
{
    zcx::Polyomino p = [&] {
        try {
            return zcx::Polyomino::decode(encoding);
        } catch (const zcx::ShapeException& e) {
            throw UsageError(std::string("invalid encoding: ") + e.what());
        }
    }();
    Sink sink(g.out);
    sink.stream() << p.render_ascii();
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Convex polyomino enumeration, classification and generating-function checks"};
    app.require_subcommand(1);
    Globals globals;
    app.add_option("--threads", globals.threads, "Worker threads (0: ZCX_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--out", globals.out, "Write output to FILE instead of standard output");

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "List or count convex polyominoes of one size");
    enumerate->add_option("--size", en.size, "Semi-perimeter")->required();
    auto* count_flag = enumerate->add_flag("--count", en.count, "Print the count only");
    enumerate->add_flag("--list", en.list, "List every polyomino (default)")->excludes(count_flag);
    enumerate->add_option("--format", en.format)->check(CLI::IsMember({"lines", "json", "ascii"}));

    CensusArgs ce;
    auto* census = app.add_subcommand("census", "Class counts and degree histogram per size");
    census->add_option("--max-size", ce.max_size)->required();
    census->add_option("--format", ce.format)->check(CLI::IsMember({"csv", "json"}));

    SeriesArgs se;
    auto* series = app.add_subcommand("series", "Expand a closed-form generating function");
    std::vector<std::string> gf_names;
    for (const auto g : zcx::all_gf_names()) gf_names.emplace_back(zcx::name_of(g));
    series->add_option("--name", se.name)->required()->check(CLI::IsMember(gf_names));
    series->add_option("--x", se.x, "Rational such as 2/3");
    series->add_option("--y", se.y);
    series->add_option("--z", se.z);
    series->add_option("--terms", se.terms)->required();
    series->add_option("--format", se.format)->check(CLI::IsMember({"json", "csv"}));

    GentreeArgs ge;
    auto* gentree = app.add_subcommand("gentree", "Grow the generating tree of ascending polyominoes");
    gentree->add_option("--max-size", ge.max_size)->required();
    gentree->add_option("--mode", ge.mode)->check(CLI::IsMember({"labels", "construct"}));
    gentree->add_option("--dump-level", ge.dump_level, "Print the labels of one level");

    VerifyArgs ve;
    auto* verify = app.add_subcommand("verify", "Run cross-check suites");
    std::vector<std::string> suites{"all"};
    for (const auto& s : zcx::suite_names()) suites.push_back(s);
    verify->add_option("--suite", ve.suite)->check(CLI::IsMember(suites));
    verify->add_option("--max-size", ve.max_size, "Largest enumerated size (suite defaults otherwise)");
    verify->add_option("--fixtures", ve.fixtures, "JSON file with reference sequence prefixes");
    verify->add_option("--format", ve.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timings", ve.timings, "Include elapsed times");

    std::string encoding;
    auto* render = app.add_subcommand("render", "Draw a polyomino given its encoding");
    render->add_option("--encoding", encoding, "e.g. \"1-2;0-1\"")->required();

    for (auto* sub : {enumerate, census, series, gentree, verify, render}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*enumerate) return run_enumerate(en, globals);
        if (*census) return run_census(ce, globals);
        if (*series) return run_series(se, globals);
        if (*gentree) return run_gentree(ge, globals);
        if (*verify) return run_verify(ve, globals);
        if (*render) return run_render(encoding, globals);
    } catch (const UsageError& e) {
        std::cerr << "zcx: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "zcx: " << e.what() << '\n';
        return EXIT_FAILURE;
    }
    return kUsageError;
}
