#include "qpart/bath.hpp"

#include <cmath>
#include <sstream>

#include <lapacke.h>

namespace qpart {

namespace {

const double kPi = 3.14159265358979323846;

}  // namespace

FiniteBath build_bath(const SystemModel& s, const BathSpec& spec) {
  if (!(s.omega0 > 0.0))
    throw ConfigError(
        "build_bath requires a pinned system (omega0 > 0); approximate a free particle "
        "by a small pinning epsilon");
  if (spec.n_modes < 1) throw ConfigError("build_bath requires n_modes >= 1");
  if (!(spec.omega_max > 0.0)) throw ConfigError("build_bath requires omega_max > 0");
  std::size_t n = spec.n_modes;
  double dw = spec.omega_max / static_cast<double>(n);
  std::vector<double> freqs(n), cs(n), ms(n, 1.0);
  bool any_coupling = false;
  for (std::size_t i = 0; i < n; ++i) {
    double w = (static_cast<double>(i) + 0.5) * dw;
    double j = spectral_density(s.kernel, w);
    freqs[i] = w;
    cs[i] = std::sqrt(2.0 / kPi * ms[i] * w * j * dw);
    if (cs[i] > 0.0) any_coupling = true;
  }
  if (!any_coupling) throw ConfigError("build_bath: degenerate bath, J vanishes on every node");
  return FiniteBath{s.mass, s.omega0, std::move(freqs), std::move(cs), std::move(ms),
                    spec.counter_term};
}

NormalModes normal_modes(const FiniteBath& bath) {
  if (!(bath.system_mass > 0.0)) throw ConfigError("normal_modes: system mass must be > 0");
  if (!(bath.omega0 > 0.0)) throw ConfigError("normal_modes: omega0 must be > 0");
  std::size_t nb = bath.bath_frequencies.size();
  if (bath.couplings.size() != nb || bath.bath_masses.size() != nb)
    throw ConfigError("normal_modes: inconsistent bath array lengths");
  std::size_t n = nb + 1;
  double M = bath.system_mass;

  // Mass-weighted potential matrix, column major for LAPACK.
  std::vector<double> a(n * n, 0.0);
  double v00 = bath.omega0 * bath.omega0;
  for (std::size_t i = 0; i < nb; ++i) {
    double wn = bath.bath_frequencies[i];
    double mn = bath.bath_masses[i];
    double cn = bath.couplings[i];
    if (!(wn > 0.0) || !(mn > 0.0))
      throw ConfigError("normal_modes: bath frequencies and masses must be > 0");
    if (bath.counter_term) v00 += cn * cn / (M * mn * wn * wn);
    double off = -cn / std::sqrt(M * mn);
    a[(i + 1) * n] = off;      // row 0, column i+1
    a[i + 1] = off;            // row i+1, column 0
    a[(i + 1) * n + i + 1] = wn * wn;
  }
  a[0] = v00;

  std::vector<double> lam(n);
  lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(n),
                                   a.data(), static_cast<lapack_int>(n), lam.data());
  if (info != 0) {
    std::ostringstream os;
    os << "normal_modes: dsyevd failed with info = " << info << " (n = " << n << ")";
    throw NumericalError(os.str());
  }
  if (!(lam.front() > 0.0)) {
    std::ostringstream os;
    os << "normal_modes: nonpositive eigenvalue, potential matrix is not positive definite; "
       << "min lambda = " << lam.front() << ", max lambda = " << lam.back()
       << ", spread = " << (lam.front() != 0.0 ? lam.back() / lam.front() : 0.0)
       << (bath.counter_term ? "" : " (counter term disabled)");
    throw NumericalError(os.str());
  }
  NormalModes modes;
  modes.frequencies.resize(n);
  modes.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    modes.frequencies[k] = std::sqrt(lam[k]);  // ascending because lam is
    double u0 = a[k * n];                      // first component of eigenvector k
    modes.weights[k] = u0 * u0;
  }
  return modes;
}

double exact_kinetic(const NormalModes& modes, const ThermalContext& ctx) {
  if (modes.frequencies.size() != modes.weights.size() || modes.frequencies.empty())
    throw ConfigError("exact_kinetic: malformed normal modes");
  double e = 0.0;
  for (std::size_t k = 0; k < modes.frequencies.size(); ++k)
    e += modes.weights[k] * kinetic_per_mode(ctx, modes.frequencies[k]);
  return e;
}

PartitionDensity discrete_partition(const NormalModes& modes, double bin_width) {
  if (!(bin_width > 0.0)) throw ConfigError("discrete_partition: bin_width must be > 0");
  if (modes.frequencies.size() != modes.weights.size() || modes.frequencies.empty())
    throw ConfigError("discrete_partition: malformed normal modes");
  double span = modes.frequencies.back() - modes.frequencies.front();
  if (bin_width > span)
    throw ConfigError("discrete_partition: bin_width exceeds the spectrum span");
  std::size_t nbins =
      static_cast<std::size_t>(std::floor(modes.frequencies.back() / bin_width)) + 1;
  std::vector<double> grid(nbins), values(nbins, 0.0);
  for (std::size_t j = 0; j < nbins; ++j)
    grid[j] = (static_cast<double>(j) + 0.5) * bin_width;
  for (std::size_t k = 0; k < modes.frequencies.size(); ++k) {
    auto j = static_cast<std::size_t>(std::floor(modes.frequencies[k] / bin_width));
    if (j >= nbins) j = nbins - 1;
    values[j] += modes.weights[k] / bin_width;
  }
  return PartitionDensity{std::move(grid), std::move(values), std::nullopt, 0};
}

}  // namespace qpart
