#include "smalc/countermodel.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "smalc/calculus.hpp"
#include "smalc/enumerate.hpp"

namespace smalc {

namespace {

Valuation decode_valuation(const std::vector<std::string>& atoms, std::uint64_t code, int n) {
  Valuation f;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    f.atoms[*it] = static_cast<int>(code % static_cast<std::uint64_t>(n));
    code /= static_cast<std::uint64_t>(n);
  }
  return f;
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

CountermodelSearch find_countermodel(const Sequent& seq, const Signature& sig, int max_size,
                                     std::uint64_t max_checks, int jobs) {
  CountermodelSearch out;
  const std::vector<std::string> atoms = sequent_atoms(seq);
  const bool uses_bangs = !sequent_bang_indices(seq).empty();
  if (jobs < 1) jobs = 1;

  for (int size = 1; size <= max_size; ++size) {
    bool completed_size = true;
    bool stop = !for_each_quantale(size, /*unital_only=*/true, [&](const FiniteQuantale& q) {
      auto assignments = contravariant_assignments(q, sig);
      std::vector<SubexpInterpretation> sigmas;
      sigmas.reserve(assignments.size());
      for (const auto& masks : assignments) sigmas.push_back(build_sigma(q, sig, masks));

      // Sequents without modalities evaluate identically under every
      // sigma; scanning only the first assignment finds the same
      // minimal witness. The budget still counts the full space.
      const std::uint64_t valuations = pow_u64(static_cast<std::uint64_t>(q.size()), atoms.size());
      const std::uint64_t scan_sigmas = uses_bangs ? assignments.size() : 1;
      const std::uint64_t scan_space = scan_sigmas * valuations;
      const std::uint64_t true_space = assignments.size() * valuations;

      std::atomic<std::uint64_t> best(UINT64_MAX);
      auto worker = [&](std::uint64_t from, std::uint64_t step) {
        for (std::uint64_t k = from; k < scan_space; k += step) {
          if (k >= best.load(std::memory_order_relaxed)) continue;
          const SubexpInterpretation& sigma = sigmas[static_cast<std::size_t>(k / valuations)];
          Valuation f = decode_valuation(atoms, k % valuations, q.size());
          if (!holds(q, &sigma, f, seq)) {
            std::uint64_t cur = best.load(std::memory_order_relaxed);
            while (k < cur && !best.compare_exchange_weak(cur, k)) {
            }
            return;
          }
        }
      };
      if (jobs > 1 && scan_space >= 2048) {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
          pool.emplace_back(worker, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(jobs));
        for (auto& t : pool) t.join();
        // The strided scan may have skipped indices below a late find;
        // verify minimality sequentially up to the candidate.
        std::uint64_t candidate = best.load();
        for (std::uint64_t k = 0; k < candidate && k < scan_space; ++k) {
          const SubexpInterpretation& sigma = sigmas[static_cast<std::size_t>(k / valuations)];
          Valuation f = decode_valuation(atoms, k % valuations, q.size());
          if (!holds(q, &sigma, f, seq)) {
            best.store(k);
            break;
          }
        }
      } else {
        worker(0, 1);
      }

      const std::uint64_t found = best.load();
      if (found != UINT64_MAX) {
        if (out.checks + found + 1 > max_checks) {
          out.budget_exhausted = true;
          completed_size = false;
          return false;
        }
        out.checks += found + 1;
        Countermodel w;
        w.quantale = std::make_shared<FiniteQuantale>(q);
        const auto& sigma = sigmas[static_cast<std::size_t>(found / valuations)];
        for (const auto& cm : sigma.conuclei) w.sigma_tables.push_back(cm.table);
        w.valuation = decode_valuation(atoms, found % valuations, q.size()).atoms;
        out.witness = std::move(w);
        return false;
      }
      if (out.checks + true_space > max_checks) {
        out.budget_exhausted = true;
        completed_size = false;
        return false;
      }
      out.checks += true_space;
      return true;
    });
    if (stop) return out;
    if (completed_size) out.largest_size_completed = size;
  }
  return out;
}

std::string print_witness(const Countermodel& w, const Signature& sig) {
  std::string out = print_quantale(*w.quantale);
  for (int s = 0; s < sig.index_count(); ++s) {
    out += "sigma " + sig.name_of(s) + " =";
    for (int v : w.sigma_tables[static_cast<std::size_t>(s)]) out += ' ' + std::to_string(v);
    out += '\n';
  }
  for (const auto& [atom, value] : w.valuation)
    out += "valuation " + atom + " = " + std::to_string(value) + '\n';
  return out;
}

WitnessParse parse_witness_text(const std::string& text, const Signature& sig) {
  WitnessParse out;
  std::stringstream in(text);
  QuantaleResult q = parse_quantale_stream(in);
  if (!q.ok()) {
    out.errors = q.errors;
    return out;
  }
  Countermodel w;
  w.quantale = std::make_shared<FiniteQuantale>(std::move(*q.quantale));
  w.sigma_tables.assign(static_cast<std::size_t>(sig.index_count()), {});

  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::stringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "sigma") {
      std::string name, eq;
      ls >> name >> eq;
      auto id = sig.find(name);
      if (!id || eq != "=") {
        out.errors.push_back("bad sigma line: " + line);
        continue;
      }
      std::vector<int> table;
      int v;
      while (ls >> v) table.push_back(v);
      if (table.size() != static_cast<std::size_t>(w.quantale->size())) {
        out.errors.push_back("sigma table for '" + name + "' has wrong length");
        continue;
      }
      w.sigma_tables[static_cast<std::size_t>(*id)] = std::move(table);
    } else if (kw == "valuation") {
      std::string name, eq;
      int v;
      if (!(ls >> name >> eq >> v) || eq != "=") {
        out.errors.push_back("bad valuation line: " + line);
        continue;
      }
      w.valuation[name] = v;
    } else {
      out.errors.push_back("unknown witness directive: " + kw);
    }
  }
  for (int s = 0; s < sig.index_count(); ++s)
    if (w.sigma_tables[static_cast<std::size_t>(s)].empty())
      out.errors.push_back("witness misses sigma for index '" + sig.name_of(s) + "'");
  if (out.errors.empty()) out.witness = std::move(w);
  return out;
}

WitnessParse load_witness_file(const std::string& path, const Signature& sig) {
  std::ifstream f(path);
  if (!f) return WitnessParse{std::nullopt, {"cannot open witness file: " + path}};
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_witness_text(ss.str(), sig);
}

SubexpInterpretation witness_sigma(const Countermodel& w, const Signature& sig) {
  const FiniteQuantale& q = *w.quantale;
  std::vector<std::uint32_t> masks;
  masks.reserve(w.sigma_tables.size());
  for (const auto& table : w.sigma_tables) {
    ConucleusMap i = make_conucleus(q, table);
    masks.push_back(open_elements(q, i).members);
  }
  SubexpInterpretation sigma = build_sigma(q, sig, masks);
  for (std::size_t s = 0; s < w.sigma_tables.size(); ++s)
    if (sigma.conuclei[s].table != w.sigma_tables[s])
      throw EvalError("witness sigma for '" + sig.name_of(static_cast<int>(s)) +
                      "' is not reproducible from its open elements");
  return sigma;
}

std::vector<SweepModel> enumerate_models(const FiniteQuantale& q, const Signature& sig) {
  std::vector<SweepModel> out;
  for (const auto& masks : contravariant_assignments(q, sig))
    out.push_back(SweepModel{&q, build_sigma(q, sig, masks)});
  return out;
}

SweepReport soundness_sweep(const std::vector<Derivation>& corpus, const Signature& sig, Mode mode,
                            const std::vector<SweepModel>& models) {
  SweepReport report;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    CheckReport check = check_derivation(corpus[d], sig, mode);
    if (!check.ok()) {
      report.rejected.emplace_back(d, check.errors.front().message);
      continue;
    }
    const Sequent& seq = corpus[d].conclusion;
    const std::vector<std::string> atoms = sequent_atoms(seq);
    for (std::size_t m = 0; m < models.size(); ++m) {
      const FiniteQuantale& q = *models[m].quantale;
      const std::uint64_t space = pow_u64(static_cast<std::uint64_t>(q.size()), atoms.size());
      for (std::uint64_t code = 0; code < space; ++code) {
        Valuation f = decode_valuation(atoms, code, q.size());
        ++report.checks;
        if (!holds(q, &models[m].sigma, f, seq))
          report.violations.push_back(SweepViolation{d, m, f.atoms});
      }
    }
  }
  return report;
}

}  // namespace smalc
