// descalg: descent-algebra structure constants via graph coverings.
//
//   descalg table     --group S4 [--left 1] [--right 3] [--format json|text]
//   descalg cover     --group S5 --left 2,3 --right 3,4 --target 1,3 [--dot z.dot]
//   descalg verify    --group matrix:data/b3.json
//   descalg monodromy --group S5 --left 2,3 --right 3,4 --target 1,3
//
// Exit codes: 0 success, 1 invariant failure, 2 usage error, 3 element cap.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "descalg/descalg.hpp"
#include "descalg/io.hpp"

namespace {

using namespace descalg;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CoxeterSpec parse_group(const std::string& text, std::optional<std::size_t> cap) {
    CoxeterSpec spec;
    auto number = [&](std::string_view digits) {
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw UsageError("bad group '" + text + "' (expected S<n>, I<m> or matrix:<path>)");
        return static_cast<unsigned>(std::stoul(std::string(digits)));
    };
    if (text.rfind("matrix:", 0) == 0) {
        spec = io::load_matrix_spec(text.substr(7));
    } else if (!text.empty() && text[0] == 'S') {
        const unsigned n = number(std::string_view(text).substr(1));
        if (n < 1) throw UsageError("S<n> needs n >= 1");
        spec = CoxeterSpec::symmetric(n);
    } else if (!text.empty() && text[0] == 'I') {
        const unsigned m = number(std::string_view(text).substr(1));
        if (m < 2) throw UsageError("I<m> needs m >= 2");
        spec = CoxeterSpec::dihedral(m);
    } else {
        throw UsageError("bad group '" + text + "' (expected S<n>, I<m> or matrix:<path>)");
    }
    if (cap) spec.element_cap = *cap;
    return spec;
}

GeneratorSet parse_subset(const CoxeterSystem& sys, const std::string& text) {
    try {
        return GeneratorSet::parse(text, sys.rank(), sys.spec().kind == CoxeterSpec::Kind::dihedral);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string expansion_text(GeneratorSet I, GeneratorSet J, const std::vector<TableRow>& rows) {
    std::string out = I.subscript() + " " + J.subscript() + " =";
    if (rows.empty()) return out + " 0";
    bool first = true;
    for (const auto& r : rows) {
        out += first ? " " : " + ";
        first = false;
        if (r.a != 1) out += std::to_string(r.a);
        out += r.K.subscript();
    }
    return out;
}

std::string lambda_text(const MultiplicityPartition& l) {
    std::string out = "(";
    for (std::size_t i = 0; i < l.parts.size(); ++i) out += (i ? "," : "") + std::to_string(l.parts[i]);
    return out + ")";
}

struct Options {
    std::string group;
    std::optional<std::size_t> cap;
    std::string left, right, target;
    bool has_left = false, has_right = false;
    std::string format = "text";
    std::string dot;
};

int cmd_table(const Options& o) {
    const CoxeterSystem sys = build_system(parse_group(o.group, o.cap));
    const auto all = all_subsets(sys.rank());
    const std::vector<GeneratorSet> lefts = o.has_left ? std::vector{parse_subset(sys, o.left)} : all;
    const std::vector<GeneratorSet> rights = o.has_right ? std::vector{parse_subset(sys, o.right)} : all;
    const StructureTable t = structure_table(sys, lefts, rights);
    if (o.format == "json") {
        std::cout << io::table_json(t).dump(2) << "\n";
        return 0;
    }
    std::cout << "group " << t.group << " (|W| = " << sys.size() << ", rank " << t.rank << ")\n";
    for (GeneratorSet I : lefts) {
        for (GeneratorSet J : rights) {
            std::vector<TableRow> rows;
            std::copy_if(t.rows.begin(), t.rows.end(), std::back_inserter(rows),
                         [&](const TableRow& r) { return r.I == I && r.J == J; });
            std::cout << expansion_text(I, J, rows) << "\n";
            for (const auto& r : rows)
                std::cout << "  " << r.K.subscript() << ": a=" << r.a << " lambda=" << lambda_text(r.lambda)
                          << " components=" << r.components << "\n";
        }
    }
    return 0;
}

int cmd_cover(const Options& o) {
    const CoxeterSystem sys = build_system(parse_group(o.group, o.cap));
    const auto z = build_fibered_graph(sys, parse_subset(sys, o.left), parse_subset(sys, o.right),
                                       parse_subset(sys, o.target));
    const auto report = verify_covering(z);
    if (!o.dot.empty()) {
        std::ofstream out(o.dot);
        if (!out) throw UsageError("cannot write " + o.dot);
        out << io::covering_dot(z);
    }
    if (o.format == "json") {
        std::cout << io::covering_json(z).dump(2) << "\n";
    } else {
        std::cout << "Z_{" << z.I.to_string() << "/" << z.J.to_string() << "/" << z.K.to_string() << "} in "
                  << sys.spec().label() << "\n";
        std::cout << "vertices=" << z.vertices.size() << " edges=" << z.edge_count()
                  << " off_cover_edges=" << z.off_cover_edges << "\n";
        std::cout << "components=" << z.component_count << " a=" << structure_constant(z)
                  << " lambda=" << lambda_text(multiplicity_partition(z)) << "\n";
        if (z.empty()) {
            std::cout << "covering: empty instance\n";
        } else {
            std::cout << "covering: " << (report.passed() ? "ok" : "VIOLATED") << " (" << report.lifts_checked
                      << " edge lifts checked)\n";
        }
    }
    for (const auto& v : report.violations)
        if (report.status == CoveringReport::Status::violated) std::cerr << "violation: " << v << "\n";
    return report.status == CoveringReport::Status::violated ? 1 : 0;
}

int cmd_verify(const Options& o) {
    const CoxeterSystem sys = build_system(parse_group(o.group, o.cap));
    std::cout << "group " << sys.spec().label() << " (|W| = " << sys.size() << ", rank " << sys.rank() << ")\n";
    const auto rep = verify_all(sys);
    for (const auto& c : rep.checks) {
        std::cout << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << ": " << c.passed << " passed";
        if (c.skipped) std::cout << ", " << c.skipped << " skipped";
        if (c.failed) std::cout << ", " << c.failed << " failed (first: " << c.witness << ")";
        std::cout << "\n";
    }
    std::cout << (rep.ok() ? "all checks passed\n" : "verification FAILED\n");
    return rep.ok() ? 0 : 1;
}

int cmd_monodromy(const Options& o) {
    const CoxeterSystem sys = build_system(parse_group(o.group, o.cap));
    const auto z = build_fibered_graph(sys, parse_subset(sys, o.left), parse_subset(sys, o.right),
                                       parse_subset(sys, o.target));
    std::cout << io::monodromy_json(monodromy_report(z)).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Descent-algebra structure constants as covering degrees"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group,-g", o.group, "S<n>, I<m> or matrix:<path>")->required();
        sub->add_option("--cap", o.cap, "element cap for enumeration");
    };
    auto add_triple = [&](CLI::App* sub, bool need_target) {
        sub->add_option("--left,-l", o.left, "I as comma-separated 1-based indices")->required();
        sub->add_option("--right,-r", o.right, "J")->required();
        auto* t = sub->add_option("--target,-k", o.target, "K");
        if (need_target) t->required();
    };

    auto* table = app.add_subcommand("table", "product expansions Y_I Y_J");
    add_common(table);
    auto* tl = table->add_option("--left,-l", o.left, "I (omit for all)");
    auto* tr = table->add_option("--right,-r", o.right, "J (omit for all)");
    table->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

    auto* cover = app.add_subcommand("cover", "build and verify one covering Z_IJK -> Y_K");
    add_common(cover);
    add_triple(cover, true);
    cover->add_option("--dot", o.dot, "write Z as a DOT file");
    cover->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "run every invariant sweep on one group");
    add_common(verify);

    auto* mono = app.add_subcommand("monodromy", "relation-loop actions on the fibers of Z_IJK");
    add_common(mono);
    add_triple(mono, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    o.has_left = tl->count() > 0;
    o.has_right = tr->count() > 0;

    try {
        if (*table) return cmd_table(o);
        if (*cover) return cmd_cover(o);
        if (*verify) return cmd_verify(o);
        if (*mono) return cmd_monodromy(o);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
