"""LLVM-level building blocks for the compiled kernels.

``vector_compare(width)`` emits an unaligned ``<width x i8>`` load, a bytewise
equality against a broadcast byte and a bitcast of the ``<width x i1>`` result
to an integer.  On x86 this lowers to ``pcmpeqb``/``pmovmskb`` (SSE2) and the
``vp*`` forms (AVX2).
"""
from llvmlite import ir
from numba import types
from numba.extending import intrinsic

_I8 = ir.IntType(8)
_I32 = ir.IntType(32)
_I64 = ir.IntType(64)


def vector_compare(width):
    vec = ir.VectorType(_I8, width)
    zeros = ir.Constant(ir.VectorType(_I32, width), [0] * width)

    @intrinsic
    def _compare(typingctx, arr, pos, byte):
        if not isinstance(arr, types.Array) or arr.dtype != types.uint8:
            return None
        sig = types.int64(arr, types.intp, types.uint8)

        def codegen(context, builder, signature, args):
            data, offset, ch = args
            ary = context.make_array(signature.args[0])(context, builder, data)
            ptr = builder.bitcast(builder.gep(ary.data, [offset]), vec.as_pointer())
            loaded = builder.load(ptr, align=1)
            undef = ir.Constant(vec, ir.Undefined)
            splat = builder.shuffle_vector(
                builder.insert_element(undef, ch, ir.Constant(_I32, 0)), undef, zeros)
            eq = builder.icmp_unsigned("==", loaded, splat)
            bits = builder.bitcast(eq, ir.IntType(width))
            return builder.zext(bits, _I64)

        return sig, codegen

    return _compare


@intrinsic
def popcnt(typingctx, x):
    if not isinstance(x, types.Integer):
        return None
    sig = types.int64(types.int64)

    def codegen(context, builder, signature, args):
        return builder.ctpop(args[0])

    return sig, codegen


@intrinsic
def ctz(typingctx, x):
    """Index of the lowest set bit; ``x`` must be non-zero."""
    if not isinstance(x, types.Integer):
        return None
    sig = types.int64(types.int64)

    def codegen(context, builder, signature, args):
        return builder.cttz(args[0], ir.Constant(ir.IntType(1), 1))

    return sig, codegen
