package org.junit;

/**
 * The JUnit 4 assertion surface used by generated tests. API-compatible
 * with org.junit.Assert for the methods listed here.
 */
public class Assert {

    protected Assert() {
    }

    public static void fail() {
        fail(null);
    }

    public static void fail(String message) {
        throw new AssertionError(message == null ? "" : message);
    }

    public static void assertTrue(boolean condition) {
        assertTrue(null, condition);
    }

    public static void assertTrue(String message, boolean condition) {
        if (!condition) {
            fail(message == null ? "expected true" : message);
        }
    }

    public static void assertFalse(boolean condition) {
        assertFalse(null, condition);
    }

    public static void assertFalse(String message, boolean condition) {
        if (condition) {
            fail(message == null ? "expected false" : message);
        }
    }

    public static void assertEquals(Object expected, Object actual) {
        assertEquals(null, expected, actual);
    }

    public static void assertEquals(String message, Object expected, Object actual) {
        if (expected == null ? actual == null : expected.equals(actual)) {
            return;
        }
        if (expected instanceof String && actual instanceof String) {
            throw new ComparisonFailure(message, (String) expected, (String) actual);
        }
        fail((message == null ? "" : message + " ") + "expected:<" + expected + "> but was:<" + actual + ">");
    }

    public static void assertEquals(long expected, long actual) {
        assertEquals(null, expected, actual);
    }

    public static void assertEquals(String message, long expected, long actual) {
        if (expected != actual) {
            fail((message == null ? "" : message + " ") + "expected:<" + expected + "> but was:<" + actual + ">");
        }
    }

    public static void assertEquals(double expected, double actual, double delta) {
        assertEquals(null, expected, actual, delta);
    }

    public static void assertEquals(String message, double expected, double actual, double delta) {
        if (Double.compare(expected, actual) == 0) {
            return;
        }
        if (Math.abs(expected - actual) > delta) {
            fail((message == null ? "" : message + " ") + "expected:<" + expected + "> but was:<" + actual + ">");
        }
    }

    public static void assertNull(Object object) {
        assertNull(null, object);
    }

    public static void assertNull(String message, Object object) {
        if (object != null) {
            fail(message == null ? "expected null but was:<" + object + ">" : message);
        }
    }

    public static void assertNotNull(Object object) {
        assertNotNull(null, object);
    }

    public static void assertNotNull(String message, Object object) {
        if (object == null) {
            fail(message == null ? "expected non-null" : message);
        }
    }

    public static void assertSame(Object expected, Object actual) {
        if (expected != actual) {
            fail("expected same:<" + expected + "> was not:<" + actual + ">");
        }
    }

    public static void assertNotSame(Object unexpected, Object actual) {
        if (unexpected == actual) {
            fail("expected not same");
        }
    }

    public static void assertArrayEquals(int[] expected, int[] actual) {
        if (expected == null || actual == null || expected.length != actual.length) {
            fail("array lengths differ");
        }
        for (int i = 0; i < expected.length; i++) {
            if (expected[i] != actual[i]) {
                fail("arrays differ at index " + i + ": expected:<" + expected[i] + "> but was:<" + actual[i] + ">");
            }
        }
    }

    public static void assertArrayEquals(Object[] expected, Object[] actual) {
        if (expected == null || actual == null || expected.length != actual.length) {
            fail("array lengths differ");
        }
        for (int i = 0; i < expected.length; i++) {
            assertEquals("arrays differ at index " + i, expected[i], actual[i]);
        }
    }
}
