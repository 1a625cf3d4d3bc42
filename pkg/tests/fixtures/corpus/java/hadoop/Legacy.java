package org.example;

/**
 * Return the legacy codec.
 * FIXME this breaks on empty input.
 * @deprecated use {@link ModernCodec} instead.
 */
@Deprecated
public final class Legacy {
}
