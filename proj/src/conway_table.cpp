// Conway polynomial table, p <= 13, m <= 6.
// Encoding: sum c_i p^i, constant term first, monic.
#include "eaqecc/conway.hpp"

namespace eaqecc {

const ConwayEntry kConwayTable[] = {
    {2, 1, 3ULL},  // x + 1
    {2, 2, 7ULL},  // x^2 + x + 1
    {2, 3, 11ULL},  // x^3 + x + 1
    {2, 4, 19ULL},  // x^4 + x + 1
    {2, 5, 37ULL},  // x^5 + x^2 + 1
    {2, 6, 91ULL},  // x^6 + x^4 + x^3 + x + 1
    {3, 1, 4ULL},  // x + 1
    {3, 2, 17ULL},  // x^2 + 2x + 2
    {3, 3, 34ULL},  // x^3 + 2x + 1
    {3, 4, 137ULL},  // x^4 + 2x^3 + 2
    {3, 5, 250ULL},  // x^5 + 2x + 1
    {3, 6, 908ULL},  // x^6 + 2x^4 + x^2 + 2x + 2
    {5, 1, 8ULL},  // x + 3
    {5, 2, 47ULL},  // x^2 + 4x + 2
    {5, 3, 143ULL},  // x^3 + 3x + 3
    {5, 4, 747ULL},  // x^4 + 4x^2 + 4x + 2
    {5, 5, 3148ULL},  // x^5 + 4x + 3
    {5, 6, 16777ULL},  // x^6 + x^4 + 4x^3 + x^2 + 2
    {7, 1, 11ULL},  // x + 4
    {7, 2, 94ULL},  // x^2 + 6x + 3
    {7, 3, 641ULL},  // x^3 + 6x^2 + 4
    {7, 4, 2677ULL},  // x^4 + 5x^2 + 4x + 3
    {7, 5, 16818ULL},  // x^5 + x + 4
    {7, 6, 122006ULL},  // x^6 + x^4 + 5x^3 + 4x^2 + 6x + 3
    {11, 1, 20ULL},  // x + 9
    {11, 2, 200ULL},  // x^2 + 7x + 2
    {11, 3, 1362ULL},  // x^3 + 2x + 9
    {11, 4, 15721ULL},  // x^4 + 8x^2 + 10x + 2
    {11, 5, 162270ULL},  // x^5 + 10x^2 + 9
    {11, 6, 1821613ULL},  // x^6 + 3x^4 + 4x^3 + 6x^2 + 7x + 2
    {13, 1, 24ULL},  // x + 11
    {13, 2, 327ULL},  // x^2 + 12x + 2
    {13, 3, 2234ULL},  // x^3 + 2x + 11
    {13, 4, 29226ULL},  // x^4 + 3x^2 + 12x + 2
    {13, 5, 371356ULL},  // x^5 + 4x + 11
    {13, 6, 4850783ULL},  // x^6 + 10x^3 + 11x^2 + 11x + 2
};

const std::size_t kConwayTableSize = 36;

}  // namespace eaqecc
