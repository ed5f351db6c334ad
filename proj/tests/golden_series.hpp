#pragma once

// Published reduced forms of the series for degrees 1..5, frozen as data.
// These are the reference values the pipeline output is compared against.

#include <stdexcept>
#include <vector>

#include "binform/rational.hpp"

namespace golden {

using binform::BinomFactor;
using binform::FactoredRational;
using binform::Int;
using binform::ZTPoly;

inline FactoredRational p1() {
    return FactoredRational(ZTPoly::one(), {BinomFactor(1, 1)});
}

inline FactoredRational p2() {
    return FactoredRational(ZTPoly::one(), {BinomFactor(1, 2), BinomFactor(2, 0)});
}

inline FactoredRational p3() {
    ZTPoly num = ZTPoly::from_terms({{0, 0, Int(1)}, {1, 1, Int(-1)}, {2, 2, Int(1)}});
    return FactoredRational(std::move(num),
                            {BinomFactor(1, 1), BinomFactor(1, 3), BinomFactor(4, 0)});
}

inline FactoredRational p4() {
    ZTPoly num = ZTPoly::from_terms({{0, 0, Int(1)}, {1, 2, Int(-1)}, {2, 4, Int(1)}});
    return FactoredRational(std::move(num), {BinomFactor(1, 2), BinomFactor(1, 4),
                                             BinomFactor(2, 0), BinomFactor(3, 0)});
}

inline FactoredRational p5() {
    ZTPoly num = ZTPoly::from_terms({
        {0, 0, Int(1)},   {7, 3, Int(1)},   {6, 4, Int(-1)},  {2, 2, Int(1)},
        {7, 1, Int(2)},   {5, 5, Int(-1)},  {8, 2, Int(-1)},  {8, 6, Int(-2)},
        {8, 4, Int(-1)},  {5, 3, Int(1)},   {5, 1, Int(1)},   {9, 7, Int(1)},
        {10, 6, Int(-1)}, {10, 2, Int(1)},  {10, 4, Int(-1)}, {11, 3, Int(-1)},
        {9, 3, Int(1)},   {1, 3, Int(-1)},  {6, 0, Int(-1)},  {4, 4, Int(1)},
        {1, 1, Int(-1)},  {2, 6, Int(1)},   {2, 4, Int(1)},   {12, 0, Int(1)},
        {14, 6, Int(1)},  {13, 1, Int(-1)}, {13, 5, Int(-1)}, {13, 3, Int(-1)},
        {15, 7, Int(-1)}, {14, 4, Int(1)},  {3, 7, Int(-1)},  {7, 5, Int(1)},
    });
    return FactoredRational(std::move(num),
                            {BinomFactor(1, 1), BinomFactor(1, 3), BinomFactor(1, 5),
                             BinomFactor(4, 0), BinomFactor(6, 0), BinomFactor(8, 0)});
}

inline FactoredRational series(int d) {
    switch (d) {
        case 1: return p1();
        case 2: return p2();
        case 3: return p3();
        case 4: return p4();
        case 5: return p5();
    }
    throw std::out_of_range("golden::series: only degrees 1..5 are recorded");
}

}  // namespace golden
