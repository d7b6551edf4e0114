#pragma once

#include "cosetgb/code.hpp"
#include "cosetgb/matphi.hpp"
#include "cosetgb/rbasis.hpp"

namespace cosetgb {

/// Complete decoding up to radius t: beyond t the decoder reports the
/// canonical form's weight instead of guessing.
struct DecodeResult {
    enum class Status { corrected, too_many_errors };

    Status status = Status::too_many_errors;
    VectorFq error;    // corrected only
    VectorFq codeword; // corrected only
    int canonical_weight = 0;

    bool corrected() const { return status == Status::corrected; }
};

/// Binary decoding via the reduced basis: Can(standard word of the received
/// vector) is the error pattern whenever its weight is at most t.
DecodeResult decode_binary(const ReducedBasis& basis, const Code& code,
                           const VectorFq& received);

/// General-q decoding via the matphi table: cf of the received word lands on
/// the flagged canonical form exactly for correctable patterns.
DecodeResult decode_matphi(const MatphiTable& table, const Code& code,
                           const VectorFq& received);

} // namespace cosetgb
