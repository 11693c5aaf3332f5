import java.lang.annotation.Annotation;
import java.lang.reflect.InvocationTargetException;
import java.lang.reflect.Method;
import java.lang.reflect.Modifier;
import java.util.ArrayList;
import java.util.List;

/**
 * Reflective JUnit-4-style runner with a machine-readable protocol: one
 * "JTGEN-RESULT {json}" line per test method on stdout. Works against any
 * classpath that provides org.junit.Test with RUNTIME retention.
 */
public class JtgenTestRunner {

    public static void main(String[] args) {
        if (args.length < 1) {
            System.err.println("usage: JtgenTestRunner <test-class>");
            System.exit(2);
        }
        Class<?> cls;
        try {
            cls = Class.forName(args[0]);
        } catch (Throwable t) {
            System.err.println("JTGEN-FATAL cannot load " + args[0] + ": " + t);
            System.exit(3);
            return;
        }

        Object instance;
        try {
            instance = cls.getDeclaredConstructor().newInstance();
        } catch (Throwable t) {
            System.err.println("JTGEN-FATAL cannot instantiate " + args[0] + ": " + unwrap(t));
            System.exit(3);
            return;
        }

        List<Method> tests = new ArrayList<Method>();
        List<Method> befores = new ArrayList<Method>();
        List<Method> afters = new ArrayList<Method>();
        for (Method m : cls.getDeclaredMethods()) {
            if (findAnnotation(m, "org.junit.Test") != null && !Modifier.isStatic(m.getModifiers())) {
                tests.add(m);
            }
            if (findAnnotation(m, "org.junit.Before") != null) {
                befores.add(m);
            }
            if (findAnnotation(m, "org.junit.After") != null) {
                afters.add(m);
            }
        }

        for (Method test : tests) {
            runOne(instance, test, befores, afters);
        }
        System.exit(0);
    }

    private static void runOne(Object instance, Method test, List<Method> befores, List<Method> afters) {
        Annotation marker = findAnnotation(test, "org.junit.Test");
        Class<?> expected = expectedException(marker);
        Throwable thrown = null;
        try {
            for (Method b : befores) {
                b.setAccessible(true);
                b.invoke(instance);
            }
            test.setAccessible(true);
            test.invoke(instance);
        } catch (Throwable t) {
            thrown = unwrap(t);
        } finally {
            for (Method a : afters) {
                try {
                    a.setAccessible(true);
                    a.invoke(instance);
                } catch (Throwable ignored) {
                    // teardown failures never mask the test outcome
                }
            }
        }

        String outcome;
        String exceptionType = "";
        String message = "";
        String frame = "";
        if (thrown == null) {
            if (expected != null) {
                outcome = "assertion_failure";
                exceptionType = "java.lang.AssertionError";
                message = "expected exception was not thrown: " + expected.getName();
            } else {
                outcome = "passed";
            }
        } else if (expected != null && expected.isInstance(thrown)) {
            outcome = "passed";
        } else if (thrown instanceof AssertionError) {
            outcome = "assertion_failure";
            exceptionType = thrown.getClass().getName();
            message = String.valueOf(thrown.getMessage());
            frame = firstFrame(thrown);
        } else {
            outcome = "runtime_exception";
            exceptionType = thrown.getClass().getName();
            message = String.valueOf(thrown.getMessage());
            frame = firstFrame(thrown);
        }

        StringBuilder sb = new StringBuilder();
        sb.append("JTGEN-RESULT {\"test\":\"").append(escape(test.getName()));
        sb.append("\",\"outcome\":\"").append(outcome);
        sb.append("\",\"exception\":\"").append(escape(exceptionType));
        sb.append("\",\"message\":\"").append(escape(message));
        sb.append("\",\"frame\":\"").append(escape(frame)).append("\"}");
        System.out.println(sb.toString());
    }

    private static Annotation findAnnotation(Method m, String typeName) {
        for (Annotation a : m.getAnnotations()) {
            if (a.annotationType().getName().equals(typeName)) {
                return a;
            }
        }
        return null;
    }

    private static Class<?> expectedException(Annotation testAnnotation) {
        if (testAnnotation == null) {
            return null;
        }
        try {
            Method expected = testAnnotation.annotationType().getMethod("expected");
            Object value = expected.invoke(testAnnotation);
            if (value instanceof Class) {
                Class<?> cls = (Class<?>) value;
                if (!cls.getName().endsWith("$None")) {
                    return cls;
                }
            }
        } catch (Throwable ignored) {
            // annotation without an `expected` attribute
        }
        return null;
    }

    private static Throwable unwrap(Throwable t) {
        while (t instanceof InvocationTargetException && t.getCause() != null) {
            t = t.getCause();
        }
        return t;
    }

    private static String firstFrame(Throwable t) {
        StackTraceElement[] frames = t.getStackTrace();
        return frames.length > 0 ? frames[0].toString() : "";
    }

    private static String escape(String s) {
        if (s == null) {
            return "";
        }
        StringBuilder sb = new StringBuilder(s.length());
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            switch (c) {
                case '"': sb.append("\\\""); break;
                case '\\': sb.append("\\\\"); break;
                case '\n': sb.append("\\n"); break;
                case '\r': sb.append("\\r"); break;
                case '\t': sb.append("\\t"); break;
                default:
                    if (c < 0x20) {
                        sb.append(String.format("\\u%04x", (int) c));
                    } else {
                        sb.append(c);
                    }
            }
        }
        return sb.toString();
    }
}
