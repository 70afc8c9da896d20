"""Immutable ±1 edge labelings stored as one bitmask per bipartite block."""
from dataclasses import dataclass

import numpy as np

from common.errors import InputError, LabelingParseError
from common.settings import get_settings
from modules.graph_core.models.params import BLOCK_NAMES, BLOCKS, TripartiteParams, U, V, W


def check_size(params, cap=None):
    """Refuse to materialize labelings with more entries than the configured cap."""
    cap = get_settings().labeling_max_entries if cap is None else cap
    if params.edge_count > cap:
        raise InputError(f"{params} has {params.edge_count} edges, over the labeling cap {cap}")


def _mask_to_bits(mask, size):
    raw = np.frombuffer(mask.to_bytes((size + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def _bits_to_mask(bits):
    packed = np.packbits(np.asarray(bits, dtype=bool).ravel(), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass(frozen=True)
class EdgeLabeling:
    """
    A ±1 assignment on the edges of K_{m,n,p}.

    masks[k] holds block k (uv, uw, vw) row-major; a set bit means the
    edge is labeled -1.
    """
    params: TripartiteParams
    masks: tuple

    def __post_init__(self):
        check_size(self.params)
        if len(self.masks) != 3:
            raise InputError("a labeling needs exactly three block masks")
        for (rows, cols), mask in zip(self.params.block_shapes, self.masks):
            if not isinstance(mask, int) or mask < 0 or mask >> (rows * cols):
                raise InputError(f"block mask does not fit a {rows}x{cols} block")

    # construction

    @classmethod
    def all_positive(cls, params):
        return cls(params, (0, 0, 0))

    @classmethod
    def all_negative(cls, params):
        return cls(params, tuple((1 << (r * c)) - 1 for r, c in params.block_shapes))

    @classmethod
    def from_negative_flags(cls, params, flags):
        """Build from a boolean vector over edge ids (True = negative)."""
        flags = np.asarray(flags, dtype=bool)
        if flags.shape != (params.edge_count,):
            raise InputError(f"expected {params.edge_count} edge flags, got shape {flags.shape}")
        masks = []
        for offset, (rows, cols) in zip(params.block_offsets, params.block_shapes):
            masks.append(_bits_to_mask(flags[offset:offset + rows * cols]))
        return cls(params, tuple(masks))

    @classmethod
    def from_matrices(cls, params, uv, uw, vw):
        """Build from three ±1 matrices with shapes m×n, m×p and n×p."""
        masks = []
        for name, matrix, shape in zip(BLOCK_NAMES, (uv, uw, vw), params.block_shapes):
            matrix = np.asarray(matrix)
            if matrix.size == 0 and shape[0] * shape[1] == 0:
                matrix = matrix.reshape(shape)
            if matrix.shape != shape:
                raise InputError(f"{name} block has shape {matrix.shape}, expected {shape}")
            if not np.isin(matrix, (-1, 1)).all():
                raise InputError(f"{name} block contains entries other than -1 and +1")
            masks.append(_bits_to_mask(matrix == -1))
        return cls(params, tuple(masks))

    # views

    def block_negative(self, block):
        rows, cols = self.params.block_shapes[block]
        return _mask_to_bits(self.masks[block], rows * cols).reshape(rows, cols)

    def matrix(self, block):
        """±1 matrix of one block as int8"""
        return np.where(self.block_negative(block), -1, 1).astype(np.int8)

    @property
    def signs_uv(self):
        return self.matrix(0)

    @property
    def signs_uw(self):
        return self.matrix(1)

    @property
    def signs_vw(self):
        return self.matrix(2)

    def negative_flags(self):
        """Boolean vector over edge ids, True where the edge is -1."""
        return np.concatenate([self.block_negative(k).ravel() for k in range(3)])

    def signs(self):
        return np.where(self.negative_flags(), -1, 1).astype(np.int8)

    def sign(self, edge):
        block, row, col = self.params.locate(edge)
        bit = row * self.params.block_shapes[block][1] + col
        return -1 if (self.masks[block] >> bit) & 1 else 1

    @property
    def negative_count(self):
        return sum(mask.bit_count() for mask in self.masks)

    @property
    def weight(self):
        return self.params.edge_count - 2 * self.negative_count

    def negative_counts(self):
        """Negative edges at every vertex, indexed in U, V, W order."""
        uv, uw, vw = (self.block_negative(k).astype(np.int64) for k in range(3))
        return np.concatenate([
            uv.sum(axis=1) + uw.sum(axis=1),
            uv.sum(axis=0) + vw.sum(axis=1),
            uw.sum(axis=0) + vw.sum(axis=0),
        ])

    def degrees(self):
        params = self.params
        return np.repeat([params.degree(U), params.degree(V), params.degree(W)], params.sizes)

    def vertex_weight_array(self):
        return self.degrees() - 2 * self.negative_counts()

    # single-edge updates

    def with_sign(self, edge, sign):
        if sign not in (-1, 1):
            raise InputError(f"sign must be -1 or +1, got {sign!r}")
        block, row, col = self.params.locate(edge)
        bit = 1 << (row * self.params.block_shapes[block][1] + col)
        masks = list(self.masks)
        masks[block] = masks[block] | bit if sign == -1 else masks[block] & ~bit
        return EdgeLabeling(self.params, tuple(masks))

    def negate(self, edge):
        return self.with_sign(edge, -self.sign(edge))

    # part permutations

    def relabel_parts(self, order):
        """
        Labeling of the graph whose part k is this graph's part order[k].

        Blocks whose parts swap position are transposed.
        """
        order = tuple(order)
        if sorted(order) != [U, V, W]:
            raise InputError(f"not a permutation of the three parts: {order}")
        sizes = self.params.sizes
        new_params = TripartiteParams(*(sizes[k] for k in order))
        matrices = []
        for a, b in BLOCKS:
            old_a, old_b = order[a], order[b]
            if old_a < old_b:
                matrices.append(self.matrix(BLOCKS.index((old_a, old_b))))
            else:
                matrices.append(self.matrix(BLOCKS.index((old_b, old_a))).T)
        return EdgeLabeling.from_matrices(new_params, *matrices)

    # serialization

    def to_dict(self):
        data = {"m": self.params.m, "n": self.params.n, "p": self.params.p}
        for k, name in enumerate(BLOCK_NAMES):
            data[name] = self.matrix(k).tolist()
        return data

    @classmethod
    def from_dict(cls, data):
        """Parse the labeling JSON object; extra keys are ignored."""
        if not isinstance(data, dict):
            raise LabelingParseError("labeling must be a JSON object")
        missing = [key for key in ("m", "n", "p", *BLOCK_NAMES) if key not in data]
        if missing:
            raise LabelingParseError(f"labeling is missing fields: {', '.join(missing)}")
        try:
            params = TripartiteParams(data["m"], data["n"], data["p"])
            blocks = []
            for (rows, cols), name in zip(params.block_shapes, BLOCK_NAMES):
                entries = data[name]
                if not isinstance(entries, list) or len(entries) != rows:
                    raise InputError(f"{name} must have {rows} rows")
                if any(not isinstance(row, list) or len(row) != cols for row in entries):
                    raise InputError(f"{name} rows must have {cols} entries")
                if any(isinstance(x, bool) or not isinstance(x, int) for row in entries for x in row):
                    raise InputError(f"{name} entries must be the integers -1 or +1")
                blocks.append(np.array(entries, dtype=np.int64).reshape(rows, cols))
            return cls.from_matrices(params, *blocks)
        except LabelingParseError:
            raise
        except InputError as e:
            raise LabelingParseError(str(e)) from e
