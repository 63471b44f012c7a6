#include "polylab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "polylab/interpolation.hpp"
#include "polylab/json_io.hpp"
#include "polylab/rng.hpp"

namespace polylab::cli {

namespace {

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
    }
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    Json j;
    f >> j;
    return j;
}

PointSequence sequence_from_quilt_file(const std::string& path) {
    Quilt q = quilt_from_json(load_json(path));
    return points_from_rects(q.rects);
}

Json point_json(const BidiscPoint& p, int block) {
    return Json{{"z1", {p.z1.real(), p.z1.imag()}},
                {"z2", {p.z2.real(), p.z2.imag()}},
                {"block", block}};
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polylab: interpolating-sequence and Carleson-measure laboratory on the bidisc"};
    app.require_subcommand(1);

    // ---- quilt ----
    auto* quilt_cmd = app.add_subcommand("quilt", "generate and verify quilts");
    quilt_cmd->require_subcommand(1);
    std::string eps_text = "1", out_path, in_path;
    int max_depth = 40;
    auto* quilt_gen = quilt_cmd->add_subcommand("gen", "generate an equiareal quilt");
    quilt_gen->add_option("--eps", eps_text, "target union area, e.g. 1/2")->required();
    quilt_gen->add_option("--out", out_path, "output file (stdout if omitted)");
    quilt_gen->add_option("--max-depth", max_depth, "construction depth guard");
    auto* quilt_verify = quilt_cmd->add_subcommand("verify", "verify a quilt file");
    quilt_verify->add_option("--in", in_path, "quilt JSON file")->required();

    // ---- seq ----
    auto* seq_cmd = app.add_subcommand("seq", "sequence analysis from a quilt");
    seq_cmd->require_subcommand(1);
    std::string seq_quilt;
    auto* seq_build = seq_cmd->add_subcommand("build", "points z_R of a quilt");
    auto* seq_gram = seq_cmd->add_subcommand("gram", "Gram matrix diagnostics");
    auto* seq_constants = seq_cmd->add_subcommand("constants", "gamma/delta constants");
    auto* seq_carleson = seq_cmd->add_subcommand("carleson", "one-box and open-set ratios");
    for (auto* c : {seq_build, seq_gram, seq_constants, seq_carleson}) {
        c->add_option("--quilt", seq_quilt, "quilt JSON file")->required();
        c->add_option("--out", out_path, "output file");
    }

    // ---- interp ----
    auto* interp_cmd = app.add_subcommand("interp", "interpolation operators");
    interp_cmd->require_subcommand(1);
    std::string interp_quilt, targets_path;
    double p_flag = 2.0, r_flag = 4.0, t_flag = 0.0;
    int grid = 128;
    auto* interp_certify = interp_cmd->add_subcommand("certify", "Neumann-series certificate");
    interp_certify->add_option("--quilt", interp_quilt, "quilt JSON file")->required();
    interp_certify->add_option("--p", p_flag, "exponent in [1,2]");
    interp_certify->add_option("--t", t_flag, "force the kernel power offset");
    auto* interp_solve = interp_cmd->add_subcommand("solve", "solve an interpolation problem");
    interp_solve->add_option("--quilt", interp_quilt)->required();
    interp_solve->add_option("--targets", targets_path, "JSON array of [re, im]")->required();
    interp_solve->add_option("--p", p_flag);
    interp_solve->add_option("--grid", grid);
    interp_solve->add_option("--out", out_path);
    auto* interp_amar = interp_cmd->add_subcommand("amar", "finite inequality chain");
    interp_amar->add_option("--quilt", interp_quilt, "quilt file (default: built-in 3-point set)");
    interp_amar->add_option("--p", p_flag)->required();
    interp_amar->add_option("--r", r_flag)->required();
    interp_amar->add_option("--grid", grid);

    // ---- kernel probe ----
    auto* kernel_cmd = app.add_subcommand("kernel", "kernel diagnostics");
    kernel_cmd->require_subcommand(1);
    auto* kernel_probe = kernel_cmd->add_subcommand(
        "probe", "psi inner product against boundary quadrature");
    double probe_t = 1.0;
    std::vector<double> zw{0.5, 0.0, 0.3, 0.2};
    kernel_probe->add_option("--t", probe_t);
    kernel_probe->add_option("--grid", grid);
    kernel_probe->add_option("--z", zw, "re1 im1 re2 im2 of the probe point")->expected(4);

    // ---- assemble ----
    auto* assemble_cmd = app.add_subcommand("assemble", "build and certify the block union");
    int blocks = 1, targets_n = 20;
    double eta = 0.5;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::vector<std::string> eps_list;
    assemble_cmd->add_option("--blocks", blocks, "number of blocks M")->required();
    assemble_cmd->add_option("--eta", eta, "cross-block Gram tolerance");
    assemble_cmd->add_option("--seed", seed, "seed for sampled targets");
    assemble_cmd->add_option("--eps", eps_list, "per-block eps overrides");
    assemble_cmd->add_option("--targets", targets_n, "random targets per block");
    assemble_cmd->add_option("--grid", grid);
    assemble_cmd->add_option("--out", out_path, "report file");
    assemble_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (quilt_gen->parsed()) {
            QuiltGenOptions opts;
            opts.max_depth = max_depth;
            Quilt q = generate_carleson_quilt(parse_dyadic(eps_text), opts);
            emit(to_json(q), out_path, out);
            return 0;
        }
        if (quilt_verify->parsed()) {
            Quilt q = quilt_from_json(load_json(in_path));
            QuiltReport rep = verify_quilt(q.rects);
            emit(to_json(rep), out_path, out);
            return rep.is_quilt ? 0 : 1;
        }
        if (seq_build->parsed()) {
            auto seq = sequence_from_quilt_file(seq_quilt);
            Json pts = Json::array();
            for (size_t i = 0; i < seq.size(); ++i)
                pts.push_back(point_json(seq.points[i], seq.block_id[i]));
            emit(Json{{"points", pts}}, out_path, out);
            return 0;
        }
        if (seq_gram->parsed()) {
            auto seq = sequence_from_quilt_file(seq_quilt);
            GramMatrix g = gram_matrix(seq);
            emit(Json{{"size", g.size()},
                      {"max_offdiag", g.max_offdiag_abs()},
                      {"min_eigenvalue", g.min_eigenvalue()}},
                 out_path, out);
            return 0;
        }
        if (seq_constants->parsed() || seq_carleson->parsed()) {
            auto seq = sequence_from_quilt_file(seq_quilt);
            GramMatrix g = gram_matrix(seq);
            AtomicMeasure mu = atomic_measure(seq);
            Quilt q = quilt_from_json(load_json(seq_quilt));
            auto ratio = open_set_ratio(mu, q.rects);
            Json j{{"gamma", weak_separation_gamma(g)},
                   {"delta", column_bound_delta(g)},
                   {"one_box_sup", one_box_sup(mu).value},
                   {"open_set_ratio", ratio.value}};
            emit(j, out_path, out);
            return 0;
        }
        if (interp_certify->parsed()) {
            auto seq = sequence_from_quilt_file(interp_quilt);
            auto cert = neumann_certificate(seq, p_flag,
                                            t_flag > 0 ? std::optional<double>(t_flag)
                                                       : std::nullopt);
            emit(Json{{"t_star", cert.t_star},
                      {"bound", cert.bound},
                      {"scale", cert.scale},
                      {"gamma", cert.gamma},
                      {"delta", cert.delta},
                      {"dev_l1", cert.dev_l1},
                      {"dev_linf", cert.dev_linf},
                      {"dev_l2", cert.dev_l2},
                      {"ok", cert.ok}},
                 out_path, out);
            return cert.ok ? 0 : 1;
        }
        if (interp_solve->parsed()) {
            auto seq = sequence_from_quilt_file(interp_quilt);
            Json tj = load_json(targets_path);
            std::vector<Complex> targets;
            for (const auto& v : tj) targets.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
            auto cert = neumann_certificate(seq, p_flag);
            auto sol = right_inverse_solve(seq, p_flag, targets, cert, grid);
            emit(Json{{"t_star", cert.t_star},
                      {"bound", cert.bound},
                      {"residual", sol.residual},
                      {"norm2", sol.norm2},
                      {"norm_p", sol.norm_p},
                      {"C", sol.apriori_C}},
                 out_path, out);
            return sol.residual <= 1e-10 ? 0 : 1;
        }
        if (interp_amar->parsed()) {
            PointSequence seq;
            if (!interp_quilt.empty()) {
                seq = sequence_from_quilt_file(interp_quilt);
            } else {
                seq.append(BidiscPoint(Complex(0.5, 0.0), Complex(0.0, 0.3)), 1);
                seq.append(BidiscPoint(Complex(-0.4, 0.1), Complex(0.2, 0.0)), 1);
                seq.append(BidiscPoint(Complex(0.0, -0.5), Complex(-0.3, 0.2)), 1);
            }
            auto rep = amar_chain_check(
                seq, [](Complex z1, Complex) { return z1; }, p_flag, r_flag, grid);
            emit(Json{{"sum_g_r", rep.sum_g_r},
                      {"orlicz_norm_sq", rep.orlicz_norm_sq},
                      {"proj_norm_sq", rep.proj_norm_sq},
                      {"fg_norm_sq", rep.fg_norm_sq},
                      {"f_p_norm", rep.f_p_norm},
                      {"g_r_norm", rep.g_r_norm},
                      {"holds_orlicz", rep.holds_orlicz},
                      {"holds_projection", rep.holds_projection},
                      {"holds_hoelder", rep.holds_hoelder}},
                 out_path, out);
            return rep.all_hold() ? 0 : 1;
        }
        if (kernel_probe->parsed()) {
            BidiscPoint z(Complex(zw[0], zw[1]), Complex(zw[2], zw[3]));
            Complex via_series = psi_inner(z, z, probe_t);
            auto quad = hp_norm_boundary(
                [&](Complex a, Complex b) { return psi_eval(z, probe_t, a, b); }, 2.0, grid);
            emit(Json{{"value", via_series.real()},
                      {"quadrature", quad.value * quad.value},
                      {"error_estimate",
                       std::abs(via_series.real() - quad.value * quad.value) +
                           2.0 * quad.value * quad.error_estimate}},
                 out_path, out);
            return 0;
        }
        if (assemble_cmd->parsed()) {
            BlockPlan plan;
            plan.blocks = blocks;
            plan.eta = eta;
            plan.seed = seed;
            plan.targets_per_block = targets_n;
            plan.quad_grid = grid;
            for (const auto& e : eps_list) plan.eps.push_back(parse_dyadic(e));
            AssemblyReport rep = certify_counterexample(plan);
            if (format == "csv") {
                std::string text = assembly_csv(rep);
                if (out_path.empty())
                    out << text;
                else {
                    std::ofstream f(out_path);
                    f << text;
                }
            } else {
                emit(to_json(rep), out_path, out);
            }
            return rep.all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace polylab::cli
