// fareykit: command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fareykit/bounded_sets.hpp"
#include "fareykit/covers.hpp"
#include "fareykit/error.hpp"
#include "fareykit/farey_metric.hpp"
#include "fareykit/fillings.hpp"
#include "fareykit/json_io.hpp"
#include "fareykit/render.hpp"
#include "fareykit/transforms.hpp"
#include "fareykit/txtree.hpp"

using namespace fareykit;
namespace jio = fareykit::json_io;

namespace {

constexpr int kModuleError = 1;
constexpr int kUsageError = 2;
// The command ran, but what it checked does not hold.
constexpr int kCheckFailed = 3;

bool g_json = false;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error(ErrorKind::ParseError, "cannot write " + path);
    }
}

void emit(std::string_view command, const jio::json& result, const std::string& text) {
    if (g_json) {
        std::cout << jio::envelope(command, result).dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string slope_line(const std::vector<Slope>& v) {
    std::string out;
    for (const auto& s : v) {
        out += (out.empty() ? "" : " ") + to_string(s);
    }
    return out + "\n";
}

DistanceMethod method_for(const std::string& name, const Slope& a, const Slope& b) {
    if (name == "oracle") {
        return DistanceMethod::Oracle;
    }
    if (name == "fast") {
        return DistanceMethod::Fast;
    }
    return preferred_method(std::max(a.max_entry(), b.max_entry()));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string ratio(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", r);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slopes, Farey distances, covers, fillings and T(X) trees."};
    app.name("fareykit");
    app.add_flag("--json", g_json, "Print a structured JSON document instead of text");
    app.require_subcommand(1);
    app.fallthrough();

    std::function<int()> action;

    // dist
    std::string a_text, b_text, method = "auto";
    auto* dist = app.add_subcommand("dist", "Farey distance between two slopes");
    dist->add_option("A", a_text)->required();
    dist->add_option("B", b_text)->required();
    dist->add_option("--method", method, "oracle, fast or auto")
        ->check(CLI::IsMember({"oracle", "fast", "auto"}));
    dist->callback([&] {
        action = [&] {
            Slope a = parse_slope(a_text), b = parse_slope(b_text);
            DistanceResult r = method_for(method, a, b) == DistanceMethod::Oracle ? distance_oracle(a, b, 1)
                                                                                    : distance(a, b);
            emit("dist", jio::encode(r), std::to_string(r.value) + "\n");
            return 0;
        };
    });

    // path
    auto* path = app.add_subcommand("path", "One shortest path between two slopes");
    path->add_option("A", a_text)->required();
    path->add_option("B", b_text)->required();
    path->callback([&] {
        action = [&] {
            GeodesicPath p = geodesic_path(parse_slope(a_text), parse_slope(b_text));
            emit("path", jio::encode(p), slope_line(p.vertices));
            return 0;
        };
    });

    // ball
    std::string centre_text, bound_text;
    std::uint64_t radius = 0;
    auto* ball = app.add_subcommand("ball", "Slopes within radius R of C whose entries are at most N");
    ball->add_option("C", centre_text)->required();
    ball->add_option("R", radius)->required();
    ball->add_option("--entry-bound", bound_text)->required();
    ball->callback([&] {
        action = [&] {
            SlopeSet s = enumerate_ball(parse_slope(centre_text), radius, parse_integer(bound_text));
            emit("ball", jio::encode(s), format_slope_list(s));
            return 0;
        };
    });

    // twist
    std::string about_text;
    long long power = 1;
    auto* twist = app.add_subcommand("twist", "Apply the n-th power of the twist about A to B");
    twist->add_option("--about", about_text)->required();
    twist->add_option("--power", power);
    twist->add_option("B", b_text)->required();
    twist->callback([&] {
        action = [&] {
            Slope s = apply_map(twist_map(parse_slope(about_text)).power(power), parse_slope(b_text));
            emit("twist", jio::encode(s), to_string(s) + "\n");
            return 0;
        };
    });

    // reflect
    auto* refl = app.add_subcommand("reflect", "p/q to -p/q");
    refl->add_option("A", a_text)->required();
    refl->callback([&] {
        action = [&] {
            Slope s = reflect(parse_slope(a_text));
            emit("reflect", jio::encode(s), to_string(s) + "\n");
            return 0;
        };
    });

    // cover
    std::string matrix_text, direction;
    auto* cover = app.add_subcommand("cover", "Push a slope down a cover or pull it back up");
    cover->add_option("--matrix", matrix_text, "a,b,c,d row-major")->required();
    cover->add_option("DIRECTION", direction)->required()->check(CLI::IsMember({"push", "pull"}));
    cover->add_option("A", a_text)->required();
    cover->callback([&] {
        action = [&] {
            CoverMap m = parse_cover_matrix(matrix_text);
            Slope s = parse_slope(a_text);
            Slope r = direction == "push" ? pushforward_slope(m, s) : pullback_slope(m, s);
            emit("cover", jio::encode(r), to_string(r) + "\n");
            return 0;
        };
    });

    // cover-audit
    std::int64_t audit_bound = 10;
    auto* audit = app.add_subcommand("cover-audit", "Check the Lipschitz bound on every pair in a box");
    audit->add_option("--matrix", matrix_text, "a,b,c,d row-major")->required();
    audit->add_option("--entry-bound", audit_bound)->check(CLI::Range(std::int64_t{1}, std::int64_t{64}));
    audit->callback([&] {
        action = [&] {
            CoverMap m = parse_cover_matrix(matrix_text);
            LipschitzAudit r = lipschitz_audit(m, all_pairs_within(audit_bound));
            std::string text = "degree " + to_string(r.degree) + "\nconstant " + ratio(r.constant) + "\npairs " +
                               std::to_string(r.pairs_checked) + "\nmax forward ratio " +
                               ratio(r.max_forward_ratio) + "\nmax backward ratio " + ratio(r.max_backward_ratio) +
                               "\nwithin bound " + yes_no(r.forward_within_bound && r.backward_within_bound) +
                               "\nviolations " + std::to_string(r.violations.size()) + "\n";
            emit("cover-audit", jio::encode(r), text);
            return r.violations.empty() ? 0 : kCheckFailed;
        };
    });

    // setops
    auto* setops = app.add_subcommand("setops", "Operations on slope-list files");
    setops->require_subcommand(1);
    std::string file_a, file_b, out_path = "-";
    auto set_output = [&](const std::string& command, const SlopeSet& s) {
        if (g_json) {
            emit(command, jio::encode(s), "");
        } else {
            write_file(out_path, format_slope_list(s));
        }
    };

    auto* uni = setops->add_subcommand("union", "Union of two slope lists");
    uni->add_option("A", file_a)->required();
    uni->add_option("B", file_b)->required();
    uni->add_option("-o,--output", out_path);
    uni->callback([&] {
        action = [&] {
            set_output("setops union",
                       set_union(parse_slope_list(read_file(file_a)), parse_slope_list(read_file(file_b))));
            return 0;
        };
    });

    long long range_first = -1, range_last = 1;
    auto* sat = setops->add_subcommand("twist-saturate", "All twists about A with power in [first, last]");
    sat->add_option("SET", file_a)->required();
    sat->add_option("--about", about_text)->required();
    sat->add_option("--first", range_first);
    sat->add_option("--last", range_last);
    sat->add_option("-o,--output", out_path);
    sat->callback([&] {
        action = [&] {
            set_output("setops twist-saturate", twist_saturate(parse_slope_list(read_file(file_a)),
                                                               parse_slope(about_text), {range_first, range_last}));
            return 0;
        };
    });

    std::uint64_t c = 1;
    bound_text = "10";
    auto* delta = setops->add_subcommand("delta-neighborhood", "Slopes meeting some member at most c times");
    delta->add_option("SET", file_a)->required();
    delta->add_option("-c", c)->required();
    delta->add_option("--entry-bound", bound_text);
    delta->add_option("-o,--output", out_path);
    delta->callback([&] {
        action = [&] {
            set_output("setops delta-neighborhood",
                       delta_neighborhood(parse_slope_list(read_file(file_a)), c, parse_integer(bound_text)));
            return 0;
        };
    });

    auto* diam = setops->add_subcommand("diameter", "Measured Farey diameter of a slope list");
    diam->add_option("SET", file_a)->required();
    diam->callback([&] {
        action = [&] {
            SlopeSet s = parse_slope_list(read_file(file_a));
            std::uint64_t d = diameter(s);
            jio::json r = {{"diameter", d},
                           {"certified_bound", s.certified_bound ? jio::json(*s.certified_bound) : jio::json(nullptr)}};
            std::string text = std::to_string(d) + "\n";
            if (s.certified_bound) {
                text += "certified bound " + std::to_string(*s.certified_bound) + "\n";
            }
            emit("setops diameter", r, text);
            return s.certified_bound && d > *s.certified_bound ? kCheckFailed : 0;
        };
    });

    std::string seed_text, target_text;
    auto* derive = setops->add_subcommand("closure-derive", "Derive a truncated ball from a singleton");
    derive->add_option("--seed", seed_text)->required();
    derive->add_option("--target", target_text)->required();
    derive->add_option("--radius", radius)->required();
    derive->add_option("--entry-bound", bound_text);
    derive->callback([&] {
        action = [&] {
            ClosureDerivation d =
                closure_derive(parse_slope(seed_text), parse_slope(target_text), radius, parse_integer(bound_text));
            std::string text = "seed " + to_string(d.seed) + "\n";
            for (std::size_t i = 0; i < d.steps.size(); ++i) {
                const auto& s = d.steps[i];
                text += std::to_string(i + 1) + " " + to_string(s.rule);
                if (s.c) {
                    text += " c=" + std::to_string(*s.c);
                }
                text += " -> " + std::to_string(s.result.size()) + " slopes\n";
            }
            text += format_slope_list(d.final_set());
            emit("setops closure-derive", jio::encode(d), text);
            return 0;
        };
    });

    auto* rep = setops->add_subcommand("replay", "Recheck a derivation printed by closure-derive --json");
    rep->add_option("FILE", file_a)->required();
    rep->callback([&] {
        action = [&] {
            const jio::json doc = jio::json::parse(read_file(file_a), nullptr, false);
            if (doc.is_discarded()) {
                throw Error(ErrorKind::ParseError, file_a + " is not JSON");
            }
            ReplayResult r = replay(jio::decode_derivation(jio::unwrap(doc, "setops closure-derive")));
            jio::json result = {{"ok", r.ok},
                                {"failed_step", r.failed_step ? jio::json(*r.failed_step) : jio::json(nullptr)},
                                {"message", r.message}};
            emit("setops replay", result, r.ok ? "ok\n" : "failed: " + r.message + "\n");
            return r.ok ? 0 : kCheckFailed;
        };
    });

    // mnh
    std::string oracle_path, grid_text;
    auto* mnh = app.add_subcommand("mnh", "Every minimally non-hyperbolic multislope on a grid");
    mnh->add_option("--oracle", oracle_path, "Oracle file")->required();
    mnh->add_option("--grid", grid_text, "Per-index slopes, e.g. 1/0,0/1;1/0,0/1");
    mnh->callback([&] {
        action = [&] {
            std::optional<SlopeGrid> grid;
            if (!grid_text.empty()) {
                grid = parse_grid_spec(grid_text);
            }
            HyperbolicityOracle oracle = parse_oracle_file(read_file(oracle_path), grid);
            MnhReport r = find_all_mnh(oracle.grid(), oracle);
            std::string text;
            for (const auto& m : r.mnh) {
                text += to_string(m) + "\n";
            }
            emit("mnh", jio::encode(r), text);
            return 0;
        };
    });

    // tree
    auto* tree = app.add_subcommand("tree", "T(X) tree documents");
    tree->require_subcommand(1);
    std::string tree_path;
    auto* validate_cmd = tree->add_subcommand("validate", "Check the structural rules");
    validate_cmd->add_option("FILE", tree_path)->required();
    validate_cmd->callback([&] {
        action = [&] {
            ValidationReport r = validate(parse_tree(read_file(tree_path)));
            std::string text = r.ok() ? "ok\n" : "";
            for (const auto& v : r.violations) {
                text += to_string(v.kind) + " " + v.node + ": " + v.message + "\n";
            }
            emit("tree validate", jio::encode(r), text);
            return r.ok() ? 0 : kCheckFailed;
        };
    });
    auto* size_cmd = tree->add_subcommand("size", "Number of nodes");
    size_cmd->add_option("FILE", tree_path)->required();
    size_cmd->callback([&] {
        action = [&] {
            std::size_t n = tree_size(parse_tree(read_file(tree_path)));
            emit("tree size", jio::json(n), std::to_string(n) + "\n");
            return 0;
        };
    });
    auto* chain_cmd = tree->add_subcommand("volume-chain", "Check that volumes drop down every branch");
    chain_cmd->add_option("FILE", tree_path)->required();
    chain_cmd->callback([&] {
        action = [&] {
            VolumeChainReport r = check_volume_chain(parse_tree(read_file(tree_path)));
            std::string text = "pairs " + std::to_string(r.pairs_checked) + "\n";
            for (const auto& v : r.violations) {
                text += v.ancestor + " " + format_rational(v.ancestor_volume) + " -> " + v.descendant + " " +
                        format_rational(v.descendant_volume) + "\n";
            }
            emit("tree volume-chain", jio::encode(r), text);
            return r.ok() ? 0 : kCheckFailed;
        };
    });

    // render-farey
    RenderSpec spec;
    std::vector<std::string> highlight;
    std::string svg_path = "-";
    auto* render = app.add_subcommand("render-farey", "SVG of the Farey tessellation in the disk");
    render->add_option("--depth", spec.depth)->required();
    render->add_option("--highlight", highlight, "Slopes to mark")->delimiter(',');
    render->add_option("--label-depth", spec.label_depth);
    render->add_option("--size", spec.size)->check(CLI::Range(100u, 4096u));
    render->add_option("-o,--output", svg_path);
    render->callback([&] {
        action = [&] {
            for (const auto& h : highlight) {
                spec.highlight.push_back(parse_slope(h));
            }
            write_file(svg_path, render_farey(spec));
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "fareykit: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kModuleError;
    } catch (const std::exception& e) {
        std::cerr << "fareykit: " << e.what() << "\n";
        return kModuleError;
    }
}
