"""Discrete holographic Fourier transform: encoding and recovery."""

from holofourier.holographic.codec import (
    decode_hologram,
    encode_hologram,
    load_hologram,
    save_hologram,
)
from holofourier.holographic.encoding import encode, encode_1d, encode_2d, encode_with_seed
from holofourier.holographic.models import Hologram, PhaseField, PhaseMode, WindowSpec
from holofourier.holographic.phase import generate_phase, regenerate_phase
from holofourier.holographic.recovery import (
    check_subsampling_relation,
    recover_amplitude,
    recover_full,
    recover_masked,
    recover_source,
    recover_windowed_closed_form,
    recover_windowed_compact,
    recover_windowed_zero_extended,
    rescale_amplitude,
    subsampling_discrepancy,
)

__all__ = [
    "Hologram",
    "PhaseField",
    "PhaseMode",
    "WindowSpec",
    "check_subsampling_relation",
    "decode_hologram",
    "encode",
    "encode_1d",
    "encode_2d",
    "encode_hologram",
    "encode_with_seed",
    "generate_phase",
    "load_hologram",
    "recover_amplitude",
    "recover_full",
    "recover_masked",
    "recover_source",
    "recover_windowed_closed_form",
    "recover_windowed_compact",
    "recover_windowed_zero_extended",
    "regenerate_phase",
    "rescale_amplitude",
    "save_hologram",
    "subsampling_discrepancy",
]
