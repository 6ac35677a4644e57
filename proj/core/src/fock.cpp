#include "pqosc/fock.hpp"

namespace pqosc {

std::vector<Occupation> enumerate_occupations(const ModeConfig& config) {
  std::vector<Occupation> out;
  Occupation occ{std::vector<int>(static_cast<std::size_t>(config.n_modes), 0)};
  for (;;) {
    out.push_back(occ);
    int i = config.n_modes - 1;
    while (i >= 0) {
      if (occ.n[static_cast<std::size_t>(i)] < config.cutoff[static_cast<std::size_t>(i)]) {
        ++occ.n[static_cast<std::size_t>(i)];
        break;
      }
      occ.n[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Occupation> interior_occupations(const ModeConfig& config, int margin) {
  std::vector<Occupation> out;
  for (const Occupation& occ : enumerate_occupations(config)) {
    bool ok = true;
    for (int i = 0; i < config.n_modes && ok; ++i)
      ok = occ.n[static_cast<std::size_t>(i)] + margin <= config.cutoff[static_cast<std::size_t>(i)];
    if (ok) out.push_back(occ);
  }
  return out;
}

}  // namespace pqosc
