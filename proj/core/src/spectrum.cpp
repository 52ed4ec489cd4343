#include "extsnyder/spectrum.hpp"

#include <algorithm>
#include <numeric>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

// Split-form occupation vector: vector entries then tensor entries.
std::vector<int> flat(const Occupations& occ) {
  std::vector<int> out = occ.vector_n;
  out.insert(out.end(), occ.tensor_n.begin(), occ.tensor_n.end());
  return out;
}

}  // namespace

double free_energy(ModelKind model, const Occupations& occ, const ModelParams& params) {
  switch (model) {
    case ModelKind::CovariantExtended: return closed_form(FormulaId::CovariantFree, occ, params);
    case ModelKind::SplitEqualFrequency: return closed_form(FormulaId::SplitFree, occ, params);
    default: return closed_form(FormulaId::TwoFrequencyFree, occ, params);
  }
}

double correction_energy(ModelKind model, const Occupations& occ, const ModelParams& params) {
  switch (model) {
    case ModelKind::CovariantExtended: return closed_form(FormulaId::CovariantCorrection, occ, params);
    case ModelKind::SplitEqualFrequency: return closed_form(FormulaId::SplitCorrection, occ, params);
    case ModelKind::SplitTwoFrequencyWeyl: return closed_form(FormulaId::TwoFrequencyWeylCorrection, occ, params);
    case ModelKind::SplitTwoFrequencyClassical:
      return closed_form(FormulaId::TwoFrequencyClassicalCorrection, occ, params);
    case ModelKind::MoyalDynamic:
      return closed_form(FormulaId::MoyalEnergy, occ, params) - closed_form(FormulaId::TwoFrequencyFree, occ, params);
  }
  throw StructuralError("unhandled model");
}

std::string occupations_json(const Occupations& occ) {
  std::string out = "{";
  const int d = occ.dim();
  bool first = true;
  auto put = [&](const std::string& key, int value) {
    if (!first) out += ',';
    first = false;
    out += '"' + key + "\":" + std::to_string(value);
  };
  for (int i = 1; i <= d; ++i) put(ModeId::vector(i).label(), occ.n(i));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) put(ModeId::tensor(i, j).label(), occ.n(i, j));
  return out + "}";
}

std::vector<SpectrumRecord> spectrum_records(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                                             RealizationKind realization, const SpectrumOptions& options) {
  if (options.levels < 1) throw ValidationError("levels: must be >= 1");
  const HamiltonianParts parts = build_parts(basis, params, model, realization);
  const double lam2 = params.lambda * params.lambda;

  // Levels are taken from the built H0 so the grouping matches the solver.
  DegenerateOptions dopt;
  dopt.relative_tolerance = options.degeneracy_tolerance;
  dopt.max_levels = static_cast<std::size_t>(options.levels);
  const std::vector<DegenerateBlock> blocks = degenerate_correction(parts.h0, parts.v, dopt);

  std::vector<SpectrumRecord> records;
  for (std::size_t lv = 0; lv < blocks.size(); ++lv) {
    const DegenerateBlock& block = blocks[lv];
    // Pair block members, ordered by (diagonal, occupations), with ascending eigenvalues.
    std::vector<std::size_t> order(block.states.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<Occupations> occs;
    for (std::size_t s : block.states) occs.push_back(Occupations::of_state(*basis, s));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (block.diagonal[a] != block.diagonal[b]) return block.diagonal[a] < block.diagonal[b];
      return flat(occs[a]) < flat(occs[b]);
    });
    for (std::size_t r = 0; r < order.size(); ++r) {
      const std::size_t idx = order[r];
      SpectrumRecord rec;
      rec.level = static_cast<int>(lv);
      rec.state = block.states[idx];
      rec.occupations = occs[idx];
      rec.e0 = free_energy(model, rec.occupations, params);
      rec.de_closed = correction_energy(model, rec.occupations, params);
      rec.de_diagonal = lam2 * block.diagonal[idx];
      rec.de_degenerate = lam2 * block.eigenvalues[r];
      records.push_back(std::move(rec));
    }
  }

  if (options.exact && !records.empty()) {
    const Operator h = parts.full(params.lambda);
    const std::vector<double> exact = exact_spectrum(h, records.size(), options.eigen);
    std::vector<std::size_t> rank(records.size());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
      return records[a].e0 + records[a].de_degenerate < records[b].e0 + records[b].de_degenerate;
    });
    for (std::size_t k = 0; k < rank.size(); ++k) records[rank[k]].e_exact = exact[k];
  }

  std::stable_sort(records.begin(), records.end(), [](const SpectrumRecord& a, const SpectrumRecord& b) {
    if (a.e0 != b.e0) return a.e0 < b.e0;
    return flat(a.occupations) < flat(b.occupations);
  });
  return records;
}

}  // namespace extsnyder
