#pragma once

#include <functional>
#include <string>
#include <vector>

#include "recon/canon.hpp"
#include "recon/deck.hpp"
#include "recon/errors.hpp"
#include "recon/oracle.hpp"
#include "recon/reconstruct.hpp"

namespace recon::detail {

using ClassPredicate = std::function<bool(const Graph&)>;

// Oracle check that the deck determines one graph and that it lies in the
// class; refuses above the cap.
void prevalidate(const Deck& d, const ClassPredicate& in_class, const ReconstructOptions& options,
                 const std::string& class_name);
void prevalidate(const EdgeDeck& ed, const ClassPredicate& in_class, const ReconstructOptions& options,
                 const std::string& class_name);

// The output must reproduce the input deck and lie in the class.
void postvalidate(const ReconstructionResult& r, const Deck& d, const ClassPredicate& in_class,
                  const std::string& class_name);
void postvalidate(const ReconstructionResult& r, const EdgeDeck& ed, const ClassPredicate& in_class,
                  const std::string& class_name);

// Indices of the first card of each run of equal certificates.
std::vector<std::size_t> distinct_card_indices(const std::vector<CanonicalCert>& cards);

nlohmann::json set_json(VertexSet s);

}  // namespace recon::detail
