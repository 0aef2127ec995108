// Command-line front end: exact mass-ratio and frequency reports, Monte Carlo
// alignment estimates, rotation-representation feasibility checks, and raw
// subspace operations on matrix files.
//
// Output is byte-deterministic for a fixed command line.  Exit codes:
// 0 success, 1 computation error, 2 usage error.

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "phasemass/phasemass.hpp"

namespace {

constexpr const char* kSynopsis =
    "usage: phasemass <ratios|freq|mc-align|mc-accrual|repcheck|subspace|problems>"
    " [options]";

// Whitespace-separated numeric matrix, one row per line.  Blank lines and
// text after '#' are ignored.
std::vector<phasemass::Vector> read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw phasemass::Error("cannot open input file: " + path);
  std::vector<phasemass::Vector> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    phasemass::Vector row;
    double v = 0.0;
    while (ss >> v) row.push_back(v);
    if (!ss.eof())
      throw phasemass::DomainError("non-numeric token in " + path);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw phasemass::Error("no rows in input file: " + path);
  return rows;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw phasemass::Error("cannot open output file: " + output_path);
  out << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

phasemass::MassTable parse_masses(const std::string& s) {
  return *phasemass::mass_table_from_string(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subspace-alignment mass model toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  std::string masses = "paper";
  std::string units = "si";
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  int dim = 16;
  int sub_dim = 4;
  std::string particle_name;
  std::string file_a, file_b;

  const auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", output, "write to file instead of stdout");
  };
  const auto add_masses = [&](CLI::App* cmd) {
    cmd->add_option("--masses", masses, "measured mass table")
        ->check(CLI::IsMember({"paper", "pdg"}))
        ->capture_default_str();
  };
  const auto add_mc = [&](CLI::App* cmd) {
    cmd->add_option("--samples", samples, "Monte Carlo sample count")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  };

  CLI::App* ratios = app.add_subcommand("ratios", "exact mass ratios vs. measurement");
  add_masses(ratios);
  add_io(ratios);

  CLI::App* freq = app.add_subcommand("freq", "rest-phase frequency table");
  add_masses(freq);
  freq->add_option("--units", units,
                   "si: Compton frequency in ZHz; natural: phase rate "
                   "(numerically the mass in MeV)")
      ->check(CLI::IsMember({"natural", "si"}))
      ->capture_default_str();
  add_io(freq);

  CLI::App* mc_align = app.add_subcommand(
      "mc-align", "mean squared alignment of a random 4d subspace");
  mc_align->add_option("--dim", dim, "ambient dimension")->capture_default_str();
  add_mc(mc_align);
  add_io(mc_align);

  CLI::App* mc_accrual = app.add_subcommand(
      "mc-accrual", "accrued squared overlap behind one particle's ratio");
  mc_accrual->add_option("--particle", particle_name, "electron, pion or proton")
      ->check(CLI::IsMember({"electron", "pion", "proton"}))
      ->required();
  add_mc(mc_accrual);
  add_io(mc_accrual);

  CLI::App* repcheck = app.add_subcommand(
      "repcheck", "2x2 feasibility of the fourth and fifth rotation planes");
  add_io(repcheck);

  CLI::App* subspace = app.add_subcommand("subspace", "frame-level operations");
  subspace->require_subcommand(1);
  CLI::App* sdot = subspace->add_subcommand("dot", "scalar product of two subspaces");
  sdot->add_option("A", file_a, "matrix file, one basis vector per row")
      ->required()
      ->check(CLI::ExistingFile);
  sdot->add_option("B", file_b, "matrix file, one basis vector per row")
      ->required()
      ->check(CLI::ExistingFile);
  add_io(sdot);
  CLI::App* sexpand =
      subspace->add_subcommand("expand", "coordinate-subspace coefficients of a frame");
  sexpand->add_option("A", file_a, "matrix file, one basis vector per row")
      ->required()
      ->check(CLI::ExistingFile);
  add_io(sexpand);
  CLI::App* scount =
      subspace->add_subcommand("count", "number of coordinate subspaces");
  scount->add_option("--dim", dim, "ambient dimension")->required();
  scount->add_option("--sub-dim", sub_dim, "subspace dimension")->required();
  add_io(scount);

  CLI::App* problems = app.add_subcommand(
      "problems", "supplementary tables: frequencies, choice counts, coefficient economy");
  add_masses(problems);
  add_io(problems);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << kSynopsis << "\n" << e.what() << "\n";
    return 2;
  }

  try {
    const bool csv = format == "csv";

    if (ratios->parsed()) {
      const auto table = parse_masses(masses);
      const auto rep = phasemass::inferred_scale_report(table);
      emit(csv ? phasemass::csv_of(rep) : json_text(phasemass::json_of(rep, table)),
           output);
    } else if (freq->parsed()) {
      const auto table = parse_masses(masses);
      if (units == "si") {
        const auto rows = phasemass::frequency_report(table);
        emit(csv ? phasemass::csv_of(rows) : json_text(phasemass::json_of(rows)),
             output);
      } else {
        // Natural units: the rest phase advances at a rate equal to the mass.
        const auto& mm = phasemass::measured_masses(table);
        nlohmann::json rows = nlohmann::json::array();
        std::string text = "particle,mass_mev,phase_rate\n";
        for (auto p : {phasemass::Particle::electron, phasemass::Particle::pion,
                       phasemass::Particle::proton}) {
          const double m = mm.of(p);
          const double rate = phasemass::rest_phase(m, 1.0);
          rows.push_back({{"particle", std::string(phasemass::to_string(p))},
                          {"mass_mev", m},
                          {"phase_rate", rate}});
          text += phasemass::to_string(p);
          text += ',';
          text += phasemass::format_sig(m);
          text += ',';
          text += phasemass::format_sig(rate);
          text += '\n';
        }
        emit(csv ? text : json_text(rows), output);
      }
    } else if (mc_align->parsed()) {
      const auto est = phasemass::estimate_alignment(dim, samples, seed);
      emit(csv ? phasemass::csv_of(est) : json_text(phasemass::json_of(est)), output);
    } else if (mc_accrual->parsed()) {
      const auto p = *phasemass::particle_from_string(particle_name);
      const auto est = phasemass::estimate_accrual(p, samples, seed);
      emit(csv ? phasemass::csv_of(est) : json_text(phasemass::json_of(est)), output);
    } else if (repcheck->parsed()) {
      const auto g = phasemass::SpinGenerator::j3();
      const auto fourth = phasemass::solve_fourth_plane(g);
      const auto fifth = phasemass::check_fifth_plane(g, fourth.solutions.front());
      if (csv) {
        std::string text = "check,feasible,residual,a0,a1,a2,a3\n";
        for (const auto& s : fourth.solutions) {
          text += "fourth_plane,true,0,";
          text += phasemass::format_sig(s.a0);
          text += ',';
          text += phasemass::format_sig(s.a1);
          text += ',';
          text += phasemass::format_sig(s.a2);
          text += ',';
          text += phasemass::format_sig(s.a3);
          text += '\n';
        }
        text += "fifth_plane,false,";
        text += phasemass::format_sig(fifth.residual);
        text += ",,,,\n";
        emit(text, output);
      } else {
        emit(json_text({{"fourth_plane", phasemass::json_of(fourth)},
                        {"fifth_plane", phasemass::json_of(fifth)}}),
             output);
      }
    } else if (sdot->parsed()) {
      const auto a = phasemass::build_frame(read_matrix(file_a));
      const auto b = phasemass::build_frame(read_matrix(file_b));
      const double d = phasemass::subspace_dot(a, b);
      if (csv) {
        emit("dot\n" + phasemass::format_sig(d) + "\n", output);
      } else {
        emit(json_text({{"ambient", a.ambient()}, {"sub", a.sub()}, {"dot", d}}),
             output);
      }
    } else if (sexpand->parsed()) {
      const auto a = phasemass::build_frame(read_matrix(file_a));
      const auto p = phasemass::expand(a);
      emit(csv ? phasemass::csv_of(p) : json_text(phasemass::json_of(p)), output);
    } else if (scount->parsed()) {
      const auto count = phasemass::count_subspaces(dim, sub_dim);
      if (csv) {
        emit("N,n,count\n" + std::to_string(dim) + "," + std::to_string(sub_dim) +
                 "," + count.str() + "\n",
             output);
      } else {
        emit(json_text({{"N", dim}, {"n", sub_dim}, {"count", count.str()}}), output);
      }
    } else if (problems->parsed()) {
      const auto table = parse_masses(masses);
      const auto freqs = phasemass::frequency_report(table);
      const auto choices = phasemass::alignment_choice_table(4);
      const std::array<std::pair<int, int>, 6> dof_cases = {
          {{2, 3}, {2, 4}, {3, 6}, {4, 8}, {4, 12}, {4, 16}}};
      if (csv) {
        std::string text = phasemass::csv_of(freqs);
        text += "\na,dims,choices\n";
        for (const auto& [a, count] : choices)
          text += std::to_string(a) + "," + std::to_string(3 * a) + "," +
                  count.str() + "\n";
        text += "\nn,N,dof,coeff_count_minus_one,suffice\n";
        for (const auto& [n, N] : dof_cases) {
          const auto rep = phasemass::grassmann_dof(n, N);
          text += std::to_string(rep.n) + "," + std::to_string(rep.N) + "," +
                  std::to_string(rep.dof) + "," + rep.coeff_count_minus_one.str() +
                  "," + (rep.coefficients_suffice ? "true" : "false") + "\n";
        }
        emit(text, output);
      } else {
        nlohmann::json choice_rows = nlohmann::json::array();
        for (const auto& [a, count] : choices)
          choice_rows.push_back(
              {{"a", a}, {"dims", 3 * a}, {"choices", count.str()}});
        nlohmann::json dof_rows = nlohmann::json::array();
        for (const auto& [n, N] : dof_cases) {
          const auto rep = phasemass::grassmann_dof(n, N);
          dof_rows.push_back({{"n", rep.n},
                              {"N", rep.N},
                              {"dof", rep.dof},
                              {"coeff_count_minus_one", rep.coeff_count_minus_one.str()},
                              {"suffice", rep.coefficients_suffice}});
        }
        emit(json_text({{"compton_frequencies", phasemass::json_of(freqs)},
                        {"alignment_choices", std::move(choice_rows)},
                        {"coefficient_economy", std::move(dof_rows)}}),
             output);
      }
    }
  } catch (const phasemass::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
