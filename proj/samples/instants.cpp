// Bifurcation instants of the quaternionic Hopf fibration S^3 -> S^7 -> S^4
// for the first few eigenvalues of the round S^4.

#include <qcurv/qcurv.hpp>

#include <iomanip>
#include <iostream>

int main() {
    using namespace qcurv;
    const HopfFamily family(HopfId::ii, 1);
    const SubmersionData d = hopf_data(family);
    const Spectrum spectrum = base_spectrum(family);

    std::cout << family.label() << ": n=" << d.n << ", l=" << d.l << "\n\n";
    std::cout << std::setw(8) << "lambda" << std::setw(26) << "t_*" << std::setw(13) << "transversal\n";
    const TimeWindow everything{Rational(0), std::nullopt};
    for (const auto& r : enumerate_instants(d, spectrum, everything, 8)) {
        std::cout << std::setw(8) << r.lambda << std::setw(26) << std::setprecision(17) << r.root.approximate()
                  << std::setw(12) << (r.transversal ? "yes" : "no") << '\n';
    }
}
