// Prints the asymptotic bifurcation table for the Hopf fibrations.

#include <qcurv/qcurv.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    const int q_max = argc > 1 ? std::atoi(argv[1]) : 12;
    if (q_max < 1) {
        std::cerr << "usage: sample_hopf_table [q_max >= 1]\n";
        return 2;
    }
    std::cout << qcurv::theorem_a_markdown(qcurv::theorem_a_table(q_max));
}
