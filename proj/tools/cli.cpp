#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <type_traits>

#include "CLI11.hpp"

#include "dualramsey/dualramsey.hpp"
#include "dualramsey/io.hpp"

namespace dualramsey::cli {

namespace {

struct RunConfig {
    std::size_t guard_vertices = EnumGuard{}.max_vertices;
    std::size_t guard_chain = EnumGuard{}.max_chain;
    std::size_t guard_homset = ArrowGuards{}.max_homset;
    std::size_t max_colors = ArrowGuards{}.max_colors;
    bool verify = false;
    std::string format = "json";

    EnumGuard enumeration() const { return {guard_vertices, guard_chain}; }
    ArrowGuards arrow() const { return {guard_homset, max_colors, enumeration()}; }
};

// Raised when an arrow check found a counterexample after printing it.
struct Counterexample {};

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

/// Inline JSON, or the contents of a file.
Json load_json(const std::string& arg, const std::string& where)
{
    std::string text = arg;
    if (arg.empty() || (arg.front() != '{' && arg.front() != '[')) {
        std::ifstream in(arg);
        if (!in)
            throw ParseError(where + ": cannot open '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

/// `--source 3` means the chain 1 < 2 < 3 (or the arcless graph on it).
template <class Cat>
typename Cat::Object read_object(const std::string& arg, const std::string& where)
{
    using Object = typename Cat::Object;
    if (all_digits(arg)) {
        const auto n = std::stoul(arg);
        if (n == 0)
            throw ParseError(where + ": chains are nonempty");
        if constexpr (std::is_same_v<Object, Chain>)
            return Chain::numbered(n);
        else
            return Object(Chain::numbered(n), {});
    }
    const auto j = load_json(arg, where);
    if constexpr (std::is_same_v<Object, Chain>)
        return chain_from_json(j, where);
    else
        return graph_from_json<Object>(j, where);
}

OrderedOrientedGraph read_oograph(const std::string& arg, const std::string& where)
{
    return read_object<OOGraSrq>(arg, where);
}

MorphismClass read_class(const std::string& s)
{
    if (auto c = parse_morphism_class(s))
        return *c;
    throw ParseError("--class: unknown morphism class '" + s + "'");
}

template <class F>
decltype(auto) with_class(MorphismClass c, F&& f)
{
    switch (c) {
    case MorphismClass::ch_emb:
        return f(std::type_identity<ChEmb>{});
    case MorphismClass::ch_rs:
        return f(std::type_identity<ChRs>{});
    case MorphismClass::edig_srq:
        return f(std::type_identity<EDigSrq>{});
    case MorphismClass::oogra_srq:
        break;
    }
    return f(std::type_identity<OOGraSrq>{});
}

void print_table(std::ostream& out, const VertexMorphism& f)
{
    for (std::size_t i = 0; i < f.source().size(); ++i)
        out << (i ? " " : "") << f.target().label(f(i));
    out << '\n';
}

// ---------------------------------------------------------------------------
// Commands

struct ClassArgs {
    std::string cls = "ch-rs";
    std::string source;
    std::string target;
};

void cmd_enumerate(const ClassArgs& a, const RunConfig& cfg, std::ostream& out)
{
    with_class(read_class(a.cls), [&](auto tag) {
        using Cat = typename decltype(tag)::type;
        const auto s = read_object<Cat>(a.source, "--source");
        const auto t = read_object<Cat>(a.target, "--target");
        for (const auto& f : enumerate_homset<Cat>(s, t, cfg.enumeration()).morphisms) {
            if (cfg.format == "table")
                print_table(out, f);
            else
                out << to_json(f).dump() << '\n';
        }
    });
}

void cmd_count(const ClassArgs& a, const RunConfig& cfg, std::ostream& out)
{
    with_class(read_class(a.cls), [&](auto tag) {
        using Cat = typename decltype(tag)::type;
        const auto s = read_object<Cat>(a.source, "--source");
        const auto t = read_object<Cat>(a.target, "--target");
        out << count_homset<Cat>(s, t, cfg.enumeration()) << '\n';
    });
}

void cmd_check_morphism(const ClassArgs& a, const std::string& map_spec, std::ostream& out)
{
    with_class(read_class(a.cls), [&](auto tag) {
        using Cat = typename decltype(tag)::type;
        const auto s = read_object<Cat>(a.source, "--source");
        const auto t = read_object<Cat>(a.target, "--target");
        const auto f = morphism_from_json(load_json(map_spec, "--map"), Cat::chain_of(s), Cat::chain_of(t), "--map");
        Json verdict;
        if constexpr (Cat::tag == MorphismClass::ch_rs) {
            verdict = to_json(is_rigid_surjection(VertexMorphism(s, t, images_between(f, s, t))));
        } else if constexpr (Cat::tag == MorphismClass::ch_emb) {
            verdict = Json{{"accepted", is_member<Cat>(f, s, t)}};
        } else if constexpr (Cat::tag == MorphismClass::edig_srq) {
            verdict = to_json(is_srq_edig(f, s, t));
        } else {
            verdict = to_json(is_srq_oograph(f, s, t));
        }
        verdict["class"] = std::string(to_string(Cat::tag));
        out << verdict.dump(2) << '\n';
    });
}

struct ArrowArgs {
    std::string cls = "ch-rs";
    std::string mode = "dual";
    std::string c, b, a;
    std::size_t colors = 2;
};

void cmd_arrow(const ArrowArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const bool dual = args.mode == "dual";
    const bool holds = with_class(read_class(args.cls), [&](auto tag) {
        using Cat = typename decltype(tag)::type;
        const auto c = read_object<Cat>(args.c, "--c");
        const auto b = read_object<Cat>(args.b, "--b");
        const auto a = read_object<Cat>(args.a, "--a");
        const auto guards = cfg.arrow();
        auto v = dual ? check_arrow_dual<Cat>(c, b, a, args.colors, guards)
                      : check_arrow_direct<Cat>(c, b, a, args.colors, guards);
        if (cfg.verify && dual) {
            // Second route through the formally reversed category.
            const auto again = check_arrow_in<Opposite<Cat>>(c, b, a, args.colors, guards);
            if (again.holds != v.holds || again.counterexample != v.counterexample)
                throw InvariantViolation("dual and opposite-category verdicts differ");
        }
        auto j = to_json(v);
        j["mode"] = args.mode;
        j["class"] = std::string(to_string(Cat::tag));
        j["colors"] = args.colors;
        out << j.dump(2) << '\n';
        return v.holds;
    });
    err << (holds ? "arrow holds\n" : "counterexample coloring found\n");
    if (!holds)
        throw Counterexample{};
}

void cmd_fdrt(std::size_t k, std::size_t a, std::size_t m, std::size_t n, const RunConfig& cfg, std::ostream& out,
              std::ostream& err)
{
    const auto v = check_fdrt_instance(k, a, m, n, cfg.arrow());
    Json j{{"k", k}, {"a", a}, {"m", m}, {"n", n}, {"holds", v.holds}};
    if (v.counterexample) {
        // Report the coloring on partitions rather than on maps.
        Json colored = Json::array();
        for (std::size_t i = 0; i < v.points.size(); ++i)
            colored.push_back({{"partition", to_json(rigid_surjection_to_partition(v.points[i]))},
                               {"color", v.counterexample->colors[i]}});
        j["counterexample"] = std::move(colored);
    } else {
        j["counterexample"] = nullptr;
    }
    out << j.dump(2) << '\n';
    err << (v.holds ? "statement holds\n" : "counterexample coloring found\n");
    if (!v.holds)
        throw Counterexample{};
}

void cmd_glue(const std::string& input, const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto d = cocone_from_json(load_json(input, "--input"));
    const auto r = glue(d, {cfg.verify});
    const auto split = split_oograph(r.graph);
    bool phi_srq = true;
    for (const auto& p : r.phi)
        phi_srq = phi_srq && is_srq_oograph(p, r.graph, d.target).accepted;
    const bool in_d = is_in_subcategory_D(split);
    const bool commuted = legs_commute(d);
    const bool cocone = check_commuting_cocone(d, r.phi);

    Json phi = Json::array();
    for (const auto& p : r.phi)
        phi.push_back(to_json(p));
    Json cases = Json::object();
    for (std::size_t i = 0; i < 4; ++i)
        cases["case" + std::to_string(i + 1)] = {{"forward", r.cases.forward[i]}, {"backward", r.cases.backward[i]}};
    Json j{{"graph", to_json(r.graph)},
           {"phi", std::move(phi)},
           {"contracts",
            {{"in_subcategory_D", in_d},
             {"phi_srq", phi_srq},
             {"legs_commute", commuted},
             {"commuting_cocone", cocone}}},
           {"cases", std::move(cases)}};
    out << j.dump(2) << '\n';
    if (!(in_d && phi_srq && cocone)) {
        err << "glue: a contract check failed\n";
        if (cfg.verify)
            throw InvariantViolation("glue contract failed");
    }
}

void cmd_split(const std::string& input, std::ostream& out)
{
    out << to_json(split_oograph(read_oograph(input, "--input"))).dump(2) << '\n';
}

void cmd_relabel(const std::string& input, const std::string& prefix, std::ostream& out)
{
    const auto g = read_oograph(input, "--input");
    std::vector<std::string> labels;
    for (const auto& l : g.chain().labels())
        labels.push_back(prefix + l);
    const Chain fresh(std::move(labels));
    const OrderedOrientedGraph h(fresh, {g.arcs().begin(), g.arcs().end()});
    std::vector<std::size_t> same(g.size());
    for (std::size_t i = 0; i < same.size(); ++i)
        same[i] = i;
    out << Json{{"graph", to_json(h)}, {"renaming", to_json(VertexMorphism(fresh, g.chain(), same))}}.dump(2)
        << '\n';
}

void cmd_export_dot(const std::string& input, const std::string& name, std::ostream& out)
{
    out << to_dot(read_oograph(input, "--input"), name);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dual Ramsey toolkit for finite ordered oriented graphs", "dualramsey"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--guard-vertices", cfg.guard_vertices, "largest graph object to enumerate")
        ->check(CLI::PositiveNumber);
    app.add_option("--guard-chain", cfg.guard_chain, "largest chain to enumerate")->check(CLI::PositiveNumber);
    app.add_option("--guard-homset", cfg.guard_homset, "largest colored hom-set")->check(CLI::PositiveNumber);
    app.add_option("--max-colors", cfg.max_colors, "largest number of colors")->check(CLI::PositiveNumber);
    app.add_flag("--verify", cfg.verify, "turn contract checks into hard failures");
    app.add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    auto add_class_args = [](CLI::App* sub, ClassArgs& a) {
        sub->add_option("--class", a.cls, "ch-emb, ch-rs, edig-srq or oogra-srq");
        sub->add_option("--source", a.source, "object: a chain length, inline JSON or a file")->required();
        sub->add_option("--target", a.target, "object: a chain length, inline JSON or a file")->required();
    };

    ClassArgs enum_args, count_args, check_args;
    auto* enumerate = app.add_subcommand("enumerate", "list hom(source, target), one JSON morphism per line");
    add_class_args(enumerate, enum_args);
    auto* count = app.add_subcommand("count", "size of hom(source, target)");
    add_class_args(count, count_args);
    auto* check = app.add_subcommand("check-morphism", "class membership verdict with witness");
    add_class_args(check, check_args);
    std::string map_spec;
    check->add_option("--map", map_spec, "morphism JSON (or a bare label table), inline or a file")->required();

    ArrowArgs arrow_args;
    auto* arrow = app.add_subcommand("arrow", "decide c -> (b)^a_k");
    arrow->add_option("--class", arrow_args.cls);
    arrow->add_option("--mode", arrow_args.mode)->check(CLI::IsMember({"dual", "direct"}));
    arrow->add_option("--c", arrow_args.c, "the large object")->required();
    arrow->add_option("--b", arrow_args.b)->required();
    arrow->add_option("--a", arrow_args.a)->required();
    arrow->add_option("--colors", arrow_args.colors)->check(CLI::PositiveNumber);

    std::size_t fk = 2, fa = 0, fm = 0, fn = 0;
    auto* fdrt = app.add_subcommand("fdrt", "colorings of a-block partitions of an n-set against m-block partitions");
    fdrt->add_option("--colors", fk)->check(CLI::PositiveNumber);
    fdrt->add_option("--a", fa)->required();
    fdrt->add_option("--m", fm)->required();
    fdrt->add_option("--n", fn)->required();

    std::string glue_input, split_input, relabel_input, relabel_prefix = "x", dot_input, dot_name = "G";
    auto* glue_cmd = app.add_subcommand("glue", "glue a binary cocone into one ordered oriented graph");
    glue_cmd->add_option("--input", glue_input, "cocone JSON, inline or a file")->required();
    auto* split = app.add_subcommand("split", "forward part and reversed backward part of a graph");
    split->add_option("--input", split_input)->required();
    auto* relabel = app.add_subcommand("relabel", "prefix every vertex label");
    relabel->add_option("--input", relabel_input)->required();
    relabel->add_option("--prefix", relabel_prefix);
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    dot->add_option("--input", dot_input)->required();
    dot->add_option("--name", dot_name);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (enumerate->parsed())
            cmd_enumerate(enum_args, cfg, out);
        else if (count->parsed())
            cmd_count(count_args, cfg, out);
        else if (check->parsed())
            cmd_check_morphism(check_args, map_spec, out);
        else if (arrow->parsed())
            cmd_arrow(arrow_args, cfg, out, err);
        else if (fdrt->parsed())
            cmd_fdrt(fk, fa, fm, fn, cfg, out, err);
        else if (glue_cmd->parsed())
            cmd_glue(glue_input, cfg, out, err);
        else if (split->parsed())
            cmd_split(split_input, out);
        else if (relabel->parsed())
            cmd_relabel(relabel_input, relabel_prefix, out);
        else if (dot->parsed())
            cmd_export_dot(dot_input, dot_name, out);
    } catch (const Counterexample&) {
        return counterexample;
    } catch (const GuardExceeded& e) {
        err << "guard exceeded: " << e.what() << '\n';
        return guard_exceeded;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}

} // namespace dualramsey::cli
