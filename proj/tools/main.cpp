// CLI front end: flag parsing only, all behavior lives in aperylike/cli.hpp.
// Config precedence is flags > environment > defaults.

#include <CLI11.hpp>

#include <iostream>

#include "aperylike/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sporadic Apery-like sequences: exact terms, congruence checks, prime surveys"};
  app.require_subcommand(1);

  aperylike::RunConfig cfg;
  int a_flag = -1;

  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format: text|json|csv")
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write the report to this path instead of stdout");
  };

  auto* seq = app.add_subcommand("seq", "print terms or residues of a sequence");
  seq->add_option("--id", cfg.id, "sequence id (a..g, delta..gamma, s7, s10, s18)")->required();
  seq->add_option("--n", cfg.n, "largest index")->capture_default_str();
  seq->add_option("--mod", cfg.modulus, "reduce each term modulo this value");
  add_output(seq);

  auto* verify = app.add_subcommand("verify", "check one congruence claim");
  verify->add_option("--claim", cfg.claim,
                     "lucas|dwork|dlp|tlp|pattern|palindrome|half|third|eta-zero|cooper|gessel")
      ->required();
  verify->add_option("--id", cfg.id, "sequence id");
  verify->add_option("--p", cfg.p, "prime");
  verify->add_option("--n-max", cfg.n_max, "index bound")
      ->envname("APERYLIKE_NMAX")
      ->capture_default_str();
  verify->add_option("--mod", cfg.modulus, "modulus (pattern claims)");
  verify->add_option("--family", cfg.family, "family instead of a registered id: apery|eta|power");
  verify->add_option("--r", cfg.family_r, "apery family exponent r");
  verify->add_option("--s", cfg.family_s, "apery family exponent s");
  verify->add_option("--a", a_flag, "eta family / eta-zero exponent");
  verify->add_option("--eps", cfg.family_eps, "eta family sign exponent (0 or 1)");
  verify->add_option("--power", cfg.family_power, "power-sum family exponent 2a");
  verify->add_option("--dwork-r", cfg.dwork_r, "Dwork congruence depth r")->capture_default_str();
  verify->add_option("--m-max", cfg.dwork_m_max, "Dwork m bound")->capture_default_str();
  verify->add_option("--candidate", cfg.candidate,
                     "dlp/tlp candidate: product:<r0,r1,...>|reflect2k|threefold|reflect3");
  verify->add_option("--bound", cfg.bound, "dlp/tlp argument bound")->default_val(100);
  add_output(verify);

  auto* survey = app.add_subcommand("survey", "prime divisibility census for a sequence");
  survey->add_option("--id", cfg.id, "sequence id")->required();
  survey->add_option("--bound", cfg.bound, "largest prime to scan")
      ->envname("APERYLIKE_BOUND")
      ->capture_default_str();
  survey->add_option("--workers", cfg.workers, "parallel workers (output is identical)")
      ->envname("APERYLIKE_WORKERS")
      ->capture_default_str();
  survey->add_option("--max-bound", cfg.bound_cap, "raise the configured bound cap")
      ->envname("APERYLIKE_MAX_BOUND");
  survey->add_option("--curve-out", cfg.curve_out, "also write the running-proportion curve CSV");
  add_output(survey);

  auto* period = app.add_subcommand("period", "search for eventual periodicity of residues");
  period->add_option("--id", cfg.id, "sequence id")->required();
  period->add_option("--mod", cfg.modulus, "modulus")->required();
  period->add_option("--n-max", cfg.n_max, "residues to scan")
      ->envname("APERYLIKE_NMAX")
      ->capture_default_str();
  period->add_option("--max-period", cfg.max_period, "largest period to try")
      ->capture_default_str();
  add_output(period);

  auto* ct = app.add_subcommand("ct", "constant terms of powers of a named Laurent kernel");
  ct->add_option("--kernel", cfg.kernel, "kernel name")->capture_default_str();
  ct->add_option("--n", cfg.n, "largest power")->capture_default_str();
  add_output(ct);

  auto* report = app.add_subcommand("report", "run the standard claim battery");
  report->add_option("--id", cfg.id, "restrict to one sequence");
  report->add_option("--n-max", cfg.n_max, "index bound for per-sequence claims")
      ->envname("APERYLIKE_NMAX")
      ->capture_default_str();
  add_output(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors are exit 2, distinct from verification failures
  }

  for (auto* sub : {seq, verify, survey, period, ct, report})
    if (sub->parsed()) cfg.command = sub->get_name();
  if (a_flag >= 0) {
    cfg.family_a = a_flag;
    cfg.eta_a = a_flag;
  }
  return aperylike::run(cfg, std::cout, std::cerr);
}
