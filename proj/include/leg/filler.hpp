#pragma once
#include <string>
#include <vector>

#include "leg/movie.hpp"

namespace leg {

// Movie in filling direction (empty word or unknot -> word) with one slice per frame.
// tags[i] is the transport rule used when move i is undone, i.e. frame i+1 -> frame i.
struct FillingCertificate {
  int rho = 0;
  AFormData target;  // marks on the end word
  Movie movie;
  std::vector<McfSlice> slices;
  std::vector<std::string> tags;
};

struct FillOptions {
  TransportOptions transport;
  long long max_moves = 20000;
};

// Mirror image top to bottom.
PlatWord reflect_word(const PlatWord& w);

FillingCertificate synthesize_filling(const PlatWord& w, const MaslovPotential& mu, const AFormData& marks,
                                      const FillOptions& opt = {});

struct VerifyReport {
  bool pass = false;
  int frame = -1;
  std::string rule;
  std::string reason;
};

VerifyReport verify_certificate(const FillingCertificate& cert, const TransportOptions& opt = {});

// For rho = 1 certificates whose unknot slice carries no cusp mark: prepend the unknot birth.
std::optional<FillingCertificate> close_with_unknot(const FillingCertificate& cert);

}  // namespace leg
