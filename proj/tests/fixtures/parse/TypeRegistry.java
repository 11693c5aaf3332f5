package com.fixture.registry;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public final class TypeRegistry {
    private final Map<String, Entry> entries = new HashMap<String, Entry>();

    public void register(String name, Entry entry) {
        if (name == null) {
            throw new IllegalArgumentException("name");
        }
        entries.put(name, entry);
    }

    public Entry lookup(String name) {
        Entry found = entries.get(name);
        return found != null ? found : Entry.MISSING;
    }

    public List<String> names() {
        return new ArrayList<String>(entries.keySet());
    }

    public static class Entry {
        static final Entry MISSING = new Entry("", Kind.ABSENT);

        private final String descriptor;
        private final Kind kind;

        Entry(String descriptor, Kind kind) {
            this.descriptor = descriptor;
            this.kind = kind;
        }

        public String descriptor() {
            return descriptor;
        }

        public Kind kind() {
            return kind;
        }
    }

    public enum Kind {
        PRESENT,
        ABSENT,
        SHADOWED
    }

    interface Listener {
        void onRegister(String name);
    }

    static class CountingListener implements Listener {
        private int count;

        public void onRegister(String name) {
            count++;
        }

        public int count() {
            return count;
        }
    }

    public Runnable auditor(final String tag) {
        return new Runnable() {
            public void run() {
                Class<?> marker = Entry.class;
                System.out.println(tag + ":" + marker.getName());
            }
        };
    }
}
