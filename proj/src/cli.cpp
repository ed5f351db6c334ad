#include "binform/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "binform/dims.hpp"
#include "binform/rational.hpp"
#include "binform/series.hpp"

namespace binform::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

int cmd_series(int d, const std::string& format, const std::string& out_file,
               std::ostream& out, std::ostream& err) {
    RenderFormat fmt = RenderFormat::text;
    if (format == "latex")
        fmt = RenderFormat::latex;
    else if (format == "json")
        fmt = RenderFormat::json;
    std::string s = render(poincare_series(d), fmt);
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            err << "error: cannot open " << out_file << " for writing\n";
            return 2;
        }
        f << s << "\n";
        if (!f) {
            err << "error: write to " << out_file << " failed\n";
            return 2;
        }
        return 0;
    }
    out << s << "\n";
    return 0;
}

int cmd_table(int d, int imax, int jmax, const std::string& format, std::ostream& out) {
    DimTable t = dim_table(d, imax, jmax);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["d"] = d;
        j["imax"] = imax;
        j["jmax"] = jmax;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto& v : row) r.push_back(v.get_str());
            j["rows"].push_back(std::move(r));
        }
        out << j.dump() << "\n";
    } else {
        out << t.to_csv();
    }
    return 0;
}

void print_mismatches(const VerificationReport& rep, std::ostream& out) {
    for (const auto& m : rep.mismatches) {
        if (!m.context.empty()) out << "[" << m.context << "] ";
        out << "(" << m.i << "," << m.j << "): expected " << m.expected.get_str() << ", got "
            << m.got.get_str() << "\n";
    }
}

int cmd_verify(int d, int imax, int jmax, std::ostream& out) {
    VerificationReport rep = verify_dimensions(d, imax, jmax);
    if (rep.passed) {
        out << "verified d=" << d << " on box imax=" << imax << " jmax=" << jmax << ": "
            << rep.cells_checked << " values checked, all consistent\n";
        return 0;
    }
    print_mismatches(rep, out);
    return 1;
}

int cmd_batch(int dmax, const std::string& cache_dir, int workers, std::ostream& out,
              std::ostream& err) {
    const fs::path dir(cache_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        err << "error: cannot create cache directory " << dir.string() << ": " << ec.message()
            << "\n";
        return 2;
    }
    if (workers < 1) workers = 1;
    workers = std::min(workers, dmax);

    // The batch re-verifies every freshly computed series on this box
    // before writing it out.
    constexpr int kBatchImax = 6;
    constexpr int kBatchJmax = 12;

    std::atomic<int> next{1};
    std::atomic<bool> any_quarantined{false};
    std::atomic<bool> any_failed{false};
    std::mutex io;

    auto work = [&] {
        for (;;) {
            const int d = next.fetch_add(1);
            if (d > dmax) return;
            const fs::path path = dir / cache_filename(d);
            auto t0 = Clock::now();
            if (fs::exists(path)) {
                if (load_cache_file(path, d)) {
                    std::lock_guard lk(io);
                    out << "d=" << d << " cached (corner re-verified in " << elapsed_ms(t0)
                        << " ms)\n";
                    continue;
                }
                any_quarantined = true;
                fs::path bad = path;
                bad += ".bad";
                std::error_code rec;
                fs::rename(path, bad, rec);
                {
                    std::lock_guard lk(io);
                    out << "d=" << d << " cache failed re-verification, quarantined to "
                        << bad.filename().string() << "\n";
                }
            }
            FactoredRational f = poincare_series(d);
            VerificationReport rep = verify_expansion(f, d, kBatchImax, kBatchJmax);
            if (!rep.passed) {
                any_failed = true;
                std::lock_guard lk(io);
                out << "d=" << d << " FAILED verification:\n";
                print_mismatches(rep, out);
                continue;
            }
            write_cache_file(path, f, d, kBatchImax, kBatchJmax);
            std::lock_guard lk(io);
            out << "d=" << d << " computed and verified (imax=" << kBatchImax
                << ", jmax=" << kBatchJmax << ") in " << elapsed_ms(t0) << " ms\n";
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    if (any_failed) return 1;
    if (any_quarantined) return 3;
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact bivariate series of the covariant algebra of binary forms"};
    app.name("binform");
    app.require_subcommand(1);

    int d = 1, i = 0, j = 0, imax = 10, jmax = -1, dmax = 1;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    std::string format = "text", out_file, cache_dir;

    auto* series = app.add_subcommand("series", "Closed form of the series for one degree");
    series->add_option("d", d, "degree of the binary form")->required()->check(CLI::PositiveNumber);
    series->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    series->add_option("--out", out_file, "write to a file instead of stdout");

    auto* dim = app.add_subcommand("dim", "One coefficient: dimension at degree i, order j");
    dim->add_option("d", d, "degree of the binary form")->required()->check(CLI::PositiveNumber);
    dim->add_option("i", i, "degree in the generators")->required()->check(CLI::NonNegativeNumber);
    dim->add_option("j", j, "order")->required()->check(CLI::NonNegativeNumber);

    auto* table = app.add_subcommand("table", "Rectangular table of dimensions");
    table->add_option("d", d, "degree of the binary form")->required()->check(CLI::PositiveNumber);
    table->add_option("--imax", imax, "max degree")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--jmax", jmax, "max order")->required()->check(CLI::NonNegativeNumber);
    std::string tformat = "csv";
    table->add_option("--format", tformat, "output format")->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Check the closed form against counted dimensions");
    verify->add_option("d", d, "degree of the binary form")->required()->check(CLI::PositiveNumber);
    verify->add_option("--imax", imax, "max degree of the check box")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--jmax", jmax, "max order of the check box (default d*imax)")
        ->check(CLI::NonNegativeNumber);

    auto* batch = app.add_subcommand("batch", "Compute and cache the series for all degrees <= dmax");
    batch->add_option("--dmax", dmax, "largest degree")->required()->check(CLI::PositiveNumber);
    batch->add_option("--cache", cache_dir, "cache directory")->required();
    batch->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(series)) return cmd_series(d, format, out_file, out, err);
        if (app.got_subcommand(dim)) {
            out << dim_cov(d, i, j).get_str() << "\n";
            return 0;
        }
        if (app.got_subcommand(table)) return cmd_table(d, imax, jmax, tformat, out);
        if (app.got_subcommand(verify)) {
            long jm = jmax >= 0 ? jmax : static_cast<long>(d) * imax;
            return cmd_verify(d, imax, static_cast<int>(jm), out);
        }
        if (app.got_subcommand(batch)) return cmd_batch(dmax, cache_dir, workers, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace binform::cli
