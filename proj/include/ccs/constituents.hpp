#pragma once

#include <array>
#include <string>

#include "ccs/kernel.hpp"

namespace ccs {

enum class Constituent { X, Y, Z };

inline constexpr std::array<Constituent, 3> all_constituents{Constituent::X, Constituent::Y, Constituent::Z};

char to_char(Constituent c);
Constituent constituent_from_char(char c);

/// Unit-norm eigenkets of the Pauli operator, leading amplitude fixed positive.
std::array<Ket, 2> constituent_basis(Constituent c);

/// Basis-sum spider: sum over basis kets v of |v>^n <v|^m.
Tensor constituent_spider(Constituent c, int m, int n);

/// The Y spider assembled from controlled-Z cascades around an X spider.
Tensor y_spider_via_cz(int m, int n);

/// Single-qubit unitary taking the constituent's basis to the X basis (up to phases).
Tensor local_frame(Constituent c);

/// All controlled-Z pairs among n qubits.
Tensor cz_cascade_tensor(int n);

}  // namespace ccs
