package org.apache.spark;

/**
 * Shuffle writer, i.e. the map-side half of a shuffle.
 */
public interface ShuffleWriter {
}

/**
 * Computes checksums for blocks. Uses CRC32 by default.
 * @param <K> key type
 * @return nothing
 * @author carol
 */
interface Checksums<K> {
}
