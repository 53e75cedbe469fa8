#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bimatch/classify.hpp"
#include "bimatch/construct.hpp"
#include "bimatch/cuts.hpp"
#include "bimatch/io.hpp"
#include "bimatch/testlab.hpp"

namespace {

using namespace bimatch;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

const char* kind_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Linear: return "Linear";
        case Verdict::Kind::Circular: return "Circular";
        default: return "CutAdmitting";
    }
}

std::string point_text(const Pt& p) { return format_rat(p.x) + " " + format_rat(p.y); }

std::string line_text(const DirectedLine& l) {
    return point_text(l.origin) + "  " + point_text(l.origin + l.dir);
}

void print_verdict(const Verdict& v) {
    std::cout << "classification: " << kind_name(v.kind) << "\n";
    if (v.kind == Verdict::Kind::CutAdmitting) {
        std::cout << "incomparable: " << v.witness.first << " " << v.witness.second << "\n";
    } else {
        std::cout << (v.kind == Verdict::Kind::Linear ? "order:" : "cycle:");
        for (std::size_t i : v.order) std::cout << " " << i;
        std::cout << "\n";
    }
}

int cmd_build(const std::string& in, const std::string& out) {
    auto ps = parse_pointset(slurp(in));
    spit(out, serialize_matching(build_matching(ps)));
    return 0;
}

int cmd_unique(const std::string& in) {
    auto ps = parse_pointset(slurp(in));
    UniqueResult r = is_unique(ps);
    std::cout << "unique: " << (r.unique ? "yes" : "no") << "\n";
    print_verdict(r.verdict);
    return r.unique ? 0 : 1;
}

int cmd_classify(const std::string& in, const std::string& min) {
    auto ps = parse_pointset(slurp(in));
    BRMatching m = parse_matching(slurp(min), ps);
    print_verdict(classify(m));
    return 0;
}

int cmd_cut(const std::string& in, const std::string& min) {
    auto ps = parse_pointset(slurp(in));
    BRMatching m = parse_matching(slurp(min), ps);
    Verdict v = classify(m);
    if (v.kind != Verdict::Kind::CutAdmitting) {
        std::cout << "cut: none\n";
        return 1;
    }
    auto [i, j] = v.witness;
    auto w = chromatic_cut_from_pair(m, i, j, pair_geometry(m, i, j));
    std::cout << "cut: " << line_text(w.line) << "\n";
    std::cout << "segments: " << w.seg_a << " " << w.seg_b << "\n";
    return 0;
}

int cmd_balanced(const std::string& in, const std::string& min) {
    auto ps = parse_pointset(slurp(in));
    BRMatching m = parse_matching(slurp(min), ps);
    Verdict v = classify(m);
    if (v.kind != Verdict::Kind::CutAdmitting) {
        std::cout << "balanced-line: none\n";
        return 1;
    }
    BalancedLine bl = balanced_line_for_matching(m, v.witness.first, v.witness.second);
    std::cout << "balanced-line: " << line_text(bl.line) << "\n";
    std::cout << "crosses: " << bl.crossed << "\n";
    return 0;
}

int cmd_alternatives(const std::string& in, const std::string& min,
                     const std::vector<std::string>& out) {
    auto ps = parse_pointset(slurp(in));
    BRMatching m = parse_matching(slurp(min), ps);
    Verdict v = classify(m);
    if (v.kind == Verdict::Kind::Linear) {
        std::cout << "alternatives: none (unique matching)\n";
        return 1;
    }
    if (v.kind == Verdict::Kind::Circular) {
        auto [m1, m2] = alternative_matchings_circular(m, v.order);
        spit(out.size() > 0 ? out[0] : "-", serialize_matching(m1));
        spit(out.size() > 1 ? out[1] : "-", serialize_matching(m2));
        return 0;
    }
    BalancedLine bl = balanced_line_for_matching(m, v.witness.first, v.witness.second);
    BRMatching alt = alternative_matching_via_balanced_line(m, bl);
    spit(out.size() > 0 ? out[0] : "-", serialize_matching(alt));
    return 0;
}

int cmd_census(int n) {
    std::cout << census_sidedness_relations(n) << "\n";
    return 0;
}

int cmd_render(const std::string& in, const std::string& min,
               const std::vector<std::string>& overlay, const std::string& out) {
    auto ps = parse_pointset(slurp(in));
    std::optional<BRMatching> m;
    if (!min.empty()) m = parse_matching(slurp(min), ps);
    SvgOverlays ov;
    for (const std::string& o : overlay) {
        if (!m) throw InputError("overlay '" + o + "' needs a matching (-m)");
        Verdict v = classify(*m);
        if (o == "cycle" || o == "order") {
            if (v.kind == Verdict::Kind::CutAdmitting)
                throw InputError("matching admits a cut; no order to draw");
            ov.order = v.order;
            ov.annotations.push_back(kind_name(v.kind));
        } else if (o == "cut") {
            if (v.kind != Verdict::Kind::CutAdmitting)
                throw InputError("matching admits no cut");
            auto [i, j] = v.witness;
            ov.lines.push_back(chromatic_cut_from_pair(*m, i, j, pair_geometry(*m, i, j)).line);
            ov.annotations.push_back("chromatic cut");
        } else if (o == "balanced") {
            if (v.kind != Verdict::Kind::CutAdmitting)
                throw InputError("matching admits no balanced crossing line");
            ov.lines.push_back(
                balanced_line_for_matching(*m, v.witness.first, v.witness.second).line);
            ov.annotations.push_back("balanced line");
        } else {
            throw InputError("unknown overlay '" + o + "'");
        }
    }
    spit(out, render_svg(*ps, m ? &*m : nullptr, ov));
    return 0;
}

std::vector<bool> parse_occupancy(const std::string& s) {
    std::vector<bool> out;
    for (char c : s) {
        if (c != '0' && c != '1') throw InputError("occupancy must be a 0/1 string");
        out.push_back(c == '1');
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-crossing bichromatic matchings: build, classify, witness"};
    app.require_subcommand(1);

    std::string in, min, out;
    std::vector<std::string> outs, overlays;

    auto* build = app.add_subcommand("build", "construct a non-crossing matching");
    build->add_option("input", in)->required();
    build->add_option("-o,--output", out);

    auto* unique = app.add_subcommand("unique", "decide whether the matching is unique");
    unique->add_option("input", in)->required();

    auto* classify_c = app.add_subcommand("classify", "classify a matching");
    classify_c->add_option("input", in)->required();
    classify_c->add_option("matching", min)->required();

    auto* cut = app.add_subcommand("cut", "emit a chromatic cut line");
    cut->add_option("input", in)->required();
    cut->add_option("matching", min)->required();

    auto* bal = app.add_subcommand("balanced-line", "emit a balanced line crossing a segment");
    bal->add_option("input", in)->required();
    bal->add_option("matching", min)->required();

    auto* alt = app.add_subcommand("alternatives", "emit alternative matchings");
    alt->add_option("input", in)->required();
    alt->add_option("matching", min)->required();
    alt->add_option("-o,--output", outs)->expected(0, 2);

    int census_n = 3;
    auto* census = app.add_subcommand("census", "count non-linear radial sidedness relations");
    census->add_option("n", census_n)->required()->check(CLI::Range(3, 20));

    auto* gen = app.add_subcommand("gen", "generate fixtures");
    gen->require_subcommand(1);
    std::size_t gn = 4;
    long spacing = 4, bound = 1000;
    std::uint64_t seed = 1;
    std::string occupancy, inner = "1", outer = "3", direction_x = "1", direction_y = "0",
                distance = "1";
    auto* gp = gen->add_subcommand("parallel");
    gp->add_option("--n", gn)->required();
    gp->add_option("--spacing", spacing);
    gp->add_option("-o,--output", out);
    auto* gr = gen->add_subcommand("radial");
    gr->add_option("--n", gn)->required();
    gr->add_option("--occupancy", occupancy);
    gr->add_option("--inner", inner);
    gr->add_option("--outer", outer);
    gr->add_option("-o,--output", out);
    auto* grand = gen->add_subcommand("random");
    grand->add_option("--n", gn)->required();
    grand->add_option("--seed", seed);
    grand->add_option("--bound", bound);
    grand->add_option("-o,--output", out);
    auto* gd = gen->add_subcommand("duplicate");
    gd->add_option("input", in)->required();
    gd->add_option("--dx", direction_x);
    gd->add_option("--dy", direction_y);
    gd->add_option("--distance", distance);
    gd->add_option("-o,--output", out);
    auto* gnp = gen->add_subcommand("nonpar");
    gnp->add_option("-o,--output", out);

    auto* render = app.add_subcommand("render", "emit an SVG figure");
    render->add_option("input", in)->required();
    render->add_option("-m,--matching", min);
    render->add_option("--overlay", overlays);
    render->add_option("-o,--output", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) return cmd_build(in, out);
        if (*unique) return cmd_unique(in);
        if (*classify_c) return cmd_classify(in, min);
        if (*cut) return cmd_cut(in, min);
        if (*bal) return cmd_balanced(in, min);
        if (*alt) return cmd_alternatives(in, min, outs);
        if (*census) return cmd_census(census_n);
        if (*render) return cmd_render(in, min, overlays, out);
        if (*gen) {
            if (*gp) {
                spit(out, serialize_pointset(*gen_parallel(gn, spacing).points));
            } else if (*gr) {
                std::vector<bool> occ =
                    occupancy.empty() ? std::vector<bool>(gn, true) : parse_occupancy(occupancy);
                spit(out, serialize_pointset(
                              *gen_radial(gn, occ, parse_rat(inner), parse_rat(outer)).points));
            } else if (*grand) {
                spit(out, serialize_pointset(*gen_random(gn, seed, bound)));
            } else if (*gd) {
                auto ps = parse_pointset(slurp(in));
                spit(out, serialize_pointset(*gen_duplication(
                              *ps, {parse_rat(direction_x), parse_rat(direction_y)},
                              parse_rat(distance))));
            } else {
                spit(out, serialize_pointset(*gen_nonparallelizable().points));
            }
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
