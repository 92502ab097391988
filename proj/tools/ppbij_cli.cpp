// ppbij: enumerate, count, map, verify, and render the five plane partition
// classes and the bijections connecting them.
//
// Exit codes: 0 success, 1 verification failure, 2 bad flags or input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ppbij/json_io.hpp"
#include "ppbij/pipeline.hpp"
#include "ppbij/svg.hpp"
#include "ppbij/verify.hpp"

namespace {

using namespace ppbij;

std::string grid(const PP& p) {
    std::string out;
    for (size_t i = 0; i < p.rows.size(); ++i) {
        if (p.shifted) out.append(2 * i, ' ');
        for (size_t j = 0; j < p.rows[i].size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(p.rows[i][j]);
        }
        out += '\n';
    }
    return out;
}

PP read_partition(const std::string& path) {
    json j;
    if (path.empty() || path == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(path);
        PPBIJ_REQUIRE(in.good(), "cannot open input file " + path);
        in >> j;
    }
    return pp_from_json(j);
}

struct Options {
    std::string cls, direction = "forward", format = "json", suite, in_path, out_path;
    std::string config = "level";
    int n = 0, bound = -1;
    int jobs = 1;
    uint64_t seed = 0xC0FFEE;
    bool trace = false;
    bool dp = false;
};

ClassTag tag_of(const Options& o) {
    auto cls = class_from_name(o.cls);
    PPBIJ_REQUIRE(cls.has_value(), "unknown class " + o.cls);
    PPBIJ_REQUIRE(o.n >= 1, "--n must be at least 1");
    PPBIJ_REQUIRE(o.bound >= 0, "the class bound --M/--m is required");
    return {*cls, o.n, o.bound};
}

int cmd_enumerate(const Options& o) {
    ClassTag tag = tag_of(o);
    for (const PP& p : enumerate_class(tag)) {
        if (o.format == "table")
            std::cout << grid(p) << "\n";
        else
            std::cout << to_json(p) << "\n";
    }
    return 0;
}

int cmd_count(const Options& o) {
    ClassTag tag = tag_of(o);
    long long c = o.dp ? count_class_dp(tag) : (long long)enumerate_class(tag).size();
    std::cout << c << "\n";
    return 0;
}

int cmd_map(const Options& o) {
    ClassTag tag = tag_of(o);
    bool backward = o.direction == "backward";
    PPBIJ_REQUIRE(o.direction == "forward" || backward, "--direction must be forward|backward");
    PP input = read_partition(o.in_path);

    json record;
    record["input"] = to_json(input);
    Trace tr;
    Trace* trp = o.trace ? &tr : nullptr;
    PP output;
    switch (tag.cls) {
        case PPClass::pstairPP:
            output = backward ? qtcpp_to_pstair(input, tag.bound)
                              : pstair_to_qtcpp(input, tag.bound);
            break;
        case PPClass::QTCPP:
            backward = !backward;
            [[fallthrough]];
        case PPClass::SPP: {
            Pipeline pl(tag.n, tag.bound / 2);
            output = backward ? qtcpp_to_spp(pl, input, tag.bound)
                              : spp_to_qtcpp(pl, input, tag.bound);
            if (o.trace && tag.bound / 2 > 0) {
                const PP& spp_side = backward ? output : input;
                const PP& qtcpp_side = backward ? input : output;
                auto sp = spp_split(spp_side, tag.bound);
                record["split"] = {{"espp", to_json(sp.espp)}, {"t", sp.tmap}};
                if (tag.bound % 2 == 0)
                    record["marked_stair"] =
                        to_json(qtcpp_to_stair_even(qtcpp_side, tag.bound));
                std::vector<int> letters;
                for (int i = 1; i <= tag.n; ++i)
                    if (sp.tmap[i - 1]) letters.push_back(i);
                Tableau t = conj(sp.espp);
                json ins = json::array();
                for (int x : letters) {
                    auto res = row_insert(t, x);
                    ins.push_back(insert_trace_json(res.trace));
                    t = res.t;
                }
                record["insertions"] = ins;
                pl.apply_f(sp.espp, trp);
            }
            break;
        }
        case PPClass::stairPP:
            backward = !backward;
            [[fallthrough]];
        case PPClass::eSPP: {
            Pipeline pl(tag.n, tag.bound);
            ClassTag te{PPClass::eSPP, tag.n, tag.bound};
            ClassTag ts{PPClass::stairPP, tag.n, tag.bound};
            if (backward) {
                output = pl.apply_f_inverse(input, trp);
                record["stat_ledger"] = {{"S_in", stat_S(ts, input)},
                                         {"S_out", stat_S(te, output)}};
            } else {
                output = pl.apply_f(input, trp);
                record["stat_ledger"] = {{"S_in", stat_S(te, input)},
                                         {"S_out", stat_S(ts, output)}};
            }
            break;
        }
    }
    record["output"] = to_json(output);
    if (o.trace) {
        record["trace"] = trace_json(tr);
        // snapshots of the factored stages and the slot permutation moving
        // the factors across the I/J transfer
        int m = (tag.cls == PPClass::eSPP || tag.cls == PPClass::stairPP)
                    ? tag.bound
                    : tag.bound / 2;
        if (m > 0) {
            EsppParams pe{tag.n, m};
            StairParams ps{tag.n, m};
            for (const Element& e : tr) {
                if (e.stage == pe.facabs_tag()) {
                    record["espp_factored"] =
                        factored_json(e.val.items()[0].as_ints(), nullptr,
                                      payload_words(e.val.items()[1]));
                    auto sigma = e.val.items()[0].as_ints();
                    Step st = c7_8_assemble(m)->step(make_J(iota_params(2 * m), sigma),
                                                     false);
                    record["sigma_s"] =
                        st.slots.empty() ? perm_identity(m) : st.slots;
                }
                if (e.stage == ps.facabs_tag()) {
                    auto t = e.val.items()[1].as_ints();
                    record["stair_factored"] =
                        factored_json(e.val.items()[0].as_ints(), &t,
                                      payload_words(e.val.items()[2]));
                }
            }
        }
    }
    if (o.format == "table")
        std::cout << grid(input) << "|\nv\n" << grid(output);
    else
        std::cout << record << "\n";
    return 0;
}

int cmd_verify(const Options& o) {
    SuiteResult res = run_suite(o.suite, o.jobs, o.seed);
    json checks = json::array();
    for (const CheckResult& c : res.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"detail", c.detail},
                          {"seconds", c.seconds}});
    json out = {{"suite", res.suite},
                {"pass", res.pass()},
                {"seconds", res.seconds},
                {"checks", checks}};
    std::cout << out.dump(2) << "\n";
    return res.pass() ? 0 : 1;
}

int cmd_render(const Options& o) {
    ClassTag tag = tag_of(o);
    PP input = read_partition(o.in_path);
    LgvConfig cfg;
    SvgOptions svgo;
    if (tag.cls == PPClass::stairPP && o.config == "column") {
        StairParams P{tag.n, tag.bound, LevelOrder::HighFirst};
        cfg.geom = kDownRight;
        cfg.words = stair_column_words(P, input);
        for (int c = 1; c <= tag.n; ++c) cfg.starts.push_back(P.col_a(c));
        cfg.sigma = perm_identity(tag.n);
    } else if (tag.cls == PPClass::stairPP) {
        StairParams P{tag.n, tag.bound, LevelOrder::HighFirst};
        cfg.geom = kUpRight;
        cfg.words = stair_level_words(P, input);
        for (int i = 1; i <= tag.bound; ++i) cfg.starts.push_back(P.a(i));
        cfg.sigma = perm_identity(tag.bound);
        svgo.barrier = true;
        svgo.barrier_offset = 2 * tag.bound + 2;
    } else if (tag.cls == PPClass::eSPP) {
        EsppParams P{tag.n, tag.bound, LevelOrder::HighFirst};
        TauWords tw = espp_level_paths(P, input);
        cfg.geom = kUpRight;
        cfg.words = tw.words;
        for (int k = 1; k <= 2 * tag.bound; ++k)
            cfg.starts.push_back(P.a(P.tau_of(tw.taut, k)));
        cfg.sigma = perm_identity(2 * tag.bound);
    } else {
        throw structural_error("render supports --class stairPP and eSPP");
    }
    std::string svg = render_svg(cfg, svgo);
    if (o.out_path.empty() || o.out_path == "-") {
        std::cout << svg;
    } else {
        std::ofstream out(o.out_path);
        PPBIJ_REQUIRE(out.good(), "cannot open output file " + o.out_path);
        out << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane partition bijection toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool need_class) {
        if (need_class)
            sub->add_option("--class", o.cls, "partition class")->required();
        sub->add_option("--n", o.n, "size parameter")->required();
        sub->add_option("--M,--m", o.bound, "class bound (M or m)");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list a class in canonical order");
    add_common(enumerate, true);
    enumerate->add_option("--format", o.format, "json|table");

    CLI::App* count = app.add_subcommand("count", "count a class");
    add_common(count, true);
    count->add_flag("--dp", o.dp, "use the row-DP counter instead of the lister");

    CLI::App* map = app.add_subcommand("map", "apply the bijection attached to a class");
    add_common(map, true);
    map->add_option("--direction", o.direction, "forward|backward");
    map->add_option("--in", o.in_path, "input file (default: stdin)");
    map->add_flag("--trace", o.trace, "include the chain trace");
    map->add_option("--format", o.format, "json|table");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(ppbij::suite_names()));
    verify->add_option("--jobs", o.jobs, "worker pool size");
    verify->add_option("--seed", o.seed, "seed for the kernel fuzz suite");

    CLI::App* render = app.add_subcommand("render", "emit an SVG of a path configuration");
    add_common(render, true);
    render->add_option("--config", o.config, "level|column (stairPP only)");
    render->add_option("--in", o.in_path, "input file (default: stdin)");
    render->add_option("--out", o.out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(enumerate)) return cmd_enumerate(o);
        if (app.got_subcommand(count)) return cmd_count(o);
        if (app.got_subcommand(map)) return cmd_map(o);
        if (app.got_subcommand(verify)) return cmd_verify(o);
        if (app.got_subcommand(render)) return cmd_render(o);
    } catch (const ppbij::structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON input (" << e.what() << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
