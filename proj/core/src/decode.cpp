#include "cosetgb/decode.hpp"

#include <stdexcept>

namespace cosetgb {

namespace {

VectorFq subtract(const FieldSpec& field, const VectorFq& a, const VectorFq& b) {
    VectorFq out(a.size(), field.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
    return out;
}

DecodeResult corrected(const Code& code, const VectorFq& received, const VectorFq& error) {
    DecodeResult result;
    result.status = DecodeResult::Status::corrected;
    result.error = error;
    result.codeword = subtract(code.field(), received, error);
    result.canonical_weight = hamming_weight(error);
    return result;
}

} // namespace

DecodeResult decode_binary(const ReducedBasis& basis, const Code& code,
                           const VectorFq& received) {
    if (code.field().characteristic() != 2 || code.field().degree() != 1)
        throw std::invalid_argument("decode_binary: requires a binary code (p = 2, m = 1)");
    if (static_cast<int>(received.size()) != code.length())
        throw std::invalid_argument("decode_binary: received length mismatch");

    const Word can = canonical_form_binary(basis, standard_word(code, received));
    const VectorFq error = psi(code, can);
    const int weight = hamming_weight(error);
    if (weight <= basis.t) return corrected(code, received, error);
    DecodeResult result;
    result.status = DecodeResult::Status::too_many_errors;
    result.canonical_weight = weight;
    return result;
}

DecodeResult decode_matphi(const MatphiTable& table, const Code& code,
                           const VectorFq& received) {
    if (static_cast<int>(received.size()) != code.length())
        throw std::invalid_argument("decode_matphi: received length mismatch");

    const Word cf = canonical_form_cf(table, standard_word(code, received));
    const int idx = table.index_of(cf);
    if (idx < 0) throw std::logic_error("decode_matphi: cf left the canonical set");
    if (table.flags[static_cast<std::size_t>(idx)])
        return corrected(code, received, table.vectors[static_cast<std::size_t>(idx)]);
    DecodeResult result;
    result.status = DecodeResult::Status::too_many_errors;
    result.canonical_weight = hamming_weight(table.vectors[static_cast<std::size_t>(idx)]);
    return result;
}

} // namespace cosetgb
