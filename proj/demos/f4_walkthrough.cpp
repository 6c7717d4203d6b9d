// Loads the F4 bundle and walks through the F4(a3) parameter set:
// wavefront sets, the Arthur packet and the weak packet.
#include <iostream>
#include <string>

#include "orbitdual/orbitdual.hpp"

using namespace orbitdual;

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : std::string(ORBITDUAL_DATA_DIR) + "/f4.json";
  try {
    LoadedBundle lb = load_bundle_file(path);
    const Model& m = lb.model;
    const AcharDuality& D = m.achar();
    const OrbitDuality& d = m.orbit_duality();

    std::cout << "orbits of " << m.group->group_name() << ":\n";
    for (std::size_t i = 0; i < m.group->size(); ++i) {
      Orbit o(*m.group, i);
      std::cout << "  " << o.label() << (d.is_special(o) ? " (special)" : "") << "  d = " << d.dual(o).label()
                << "\n";
    }

    const ParameterSet& s = m.parameter_sets.front();
    std::cout << "\nparameters at " << s.ic_orbit().label() << ":\n";
    for (const auto& x : s.params()) {
      std::cout << "  " << x.id << "  n=" << x.n_orbit.label() << "  AZ=" << x.az_partner
                << "  CUWF=" << cuwf(s, x, D).to_string() << "\n";
    }

    std::cout << "\nArthur packet:";
    for (const auto& x : arthur_packet(s, D)) std::cout << " " << x.id;
    std::cout << "\nweak packet:";
    for (const auto& x : weak_packet(s, D)) std::cout << " " << x.id;
    std::cout << "\nspecial piece of " << s.ic_orbit().label() << ":";
    for (const auto& o : d.special_piece_of(s.ic_orbit())) std::cout << " " << o.label();
    std::cout << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
