#pragma once

// Maps between arc diagrams and (k-)parking functions, in both directions.
// Forward: read off the leftmost position of each chain. Inverse: rebuild
// the word by inserting chains in increasing value order; trailing chain
// elements have exactly one containment-free placement, found by search
// and asserted unique.

#include "shiarr/diagram.hpp"
#include "shiarr/pf.hpp"

namespace shiarr {

// f(i) = position of the leftmost element of the chain containing i.
ParkingFunction parking_from_diagram(const Diagram& d);

// Inverse insertion. With a graph, the parking function must satisfy the
// nearest-repeat edge condition; the violating pair is named otherwise.
Diagram diagram_from_parking(const ParkingFunction& f);
Diagram diagram_from_parking(const ParkingFunction& f, const SimpleGraph& g);

// a_i = position of the leftmost element of the chain holding the copies of i.
KParkingFunction parking_from_kdiagram(const KDiagram& d);

KDiagram kdiagram_from_parking(const KParkingFunction& f);

}  // namespace shiarr
